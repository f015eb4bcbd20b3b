#include "indec/pattern.hpp"

#include "indec/error.hpp"

#include <charconv>
#include <limits>

namespace indec {

Pattern::Pattern(std::vector<std::size_t> parts) : parts_(std::move(parts))
{
    if (parts_.size() < 2)
        throw Error(ErrorKind::InvalidArgument, "pattern needs at least two parts");
    std::uint64_t m = 1;
    for (auto a : parts_) {
        if (a == 0)
            throw Error(ErrorKind::InvalidArgument, "pattern parts must be positive");
        if (a > std::numeric_limits<std::uint32_t>::max() / m)
            throw Error(ErrorKind::InvalidArgument, "pattern part product too large");
        m *= a;
    }
}

Pattern Pattern::parse(std::string_view text)
{
    std::vector<std::size_t> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find(',', pos);
        if (end == std::string_view::npos)
            end = text.size();
        auto token = text.substr(pos, end - pos);
        while (!token.empty() && token.front() == ' ')
            token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ')
            token.remove_suffix(1);
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
            throw Error(ErrorKind::InvalidArgument, "malformed pattern '" + std::string(text) + "'");
        parts.push_back(value);
        pos = end + 1;
    }
    return Pattern(std::move(parts));
}

std::uint64_t Pattern::product() const
{
    std::uint64_t m = 1;
    for (auto a : parts_)
        m *= a;
    return m;
}

std::uint64_t Pattern::edge_count() const
{
    std::uint64_t e = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i)
        for (std::size_t j = i + 1; j < parts_.size(); ++j)
            e += static_cast<std::uint64_t>(parts_[i]) * parts_[j];
    return e;
}

std::uint64_t Pattern::vertex_count() const
{
    std::uint64_t s = 0;
    for (auto a : parts_)
        s += a;
    return s;
}

std::string Pattern::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

} // namespace indec
