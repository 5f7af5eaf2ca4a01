#include "lyndon/formats.hpp"

#include "lyndon/error.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>

namespace lyndon::formats {

namespace {

constexpr std::uint8_t kVersion = 1;

void put_u64(std::ostream& out, std::uint64_t v) {
    std::array<char, 8> b{};
    for (int x = 0; x < 8; ++x) b[x] = static_cast<char>((v >> (8 * x)) & 0xff);
    out.write(b.data(), 8);
}

std::uint64_t get_u64(std::istream& in, const char* what) {
    std::array<unsigned char, 8> b{};
    if (!in.read(reinterpret_cast<char*>(b.data()), 8)) throw IntegrityError(std::string("truncated ") + what);
    std::uint64_t v = 0;
    for (int x = 7; x >= 0; --x) v = (v << 8) | b[x];
    return v;
}

void expect_header(std::istream& in, const char (&magic)[5]) {
    char got[5] = {};
    if (!in.read(got, 5) || std::memcmp(got, magic, 4) != 0) {
        throw IntegrityError(std::string("missing ") + magic + " header");
    }
    if (static_cast<std::uint8_t>(got[4]) != kVersion) {
        throw IntegrityError(std::string("unsupported ") + magic + " version " +
                             std::to_string(static_cast<unsigned>(static_cast<std::uint8_t>(got[4]))));
    }
}

void expect_end(std::istream& in, const char* what) {
    if (in.peek() != std::char_traits<char>::eof()) throw IntegrityError(std::string("trailing bytes after ") + what);
}

constexpr std::uint8_t reverse_byte(std::uint8_t b) noexcept {
    b = static_cast<std::uint8_t>((b & 0xf0) >> 4 | (b & 0x0f) << 4);
    b = static_cast<std::uint8_t>((b & 0xcc) >> 2 | (b & 0x33) << 2);
    return static_cast<std::uint8_t>((b & 0xaa) >> 1 | (b & 0x55) << 1);
}

template <typename Index>
void write_values(std::ostream& out, const std::vector<Index>& values) {
    std::vector<char> buf(values.size() * sizeof(Index));
    for (std::size_t x = 0; x < values.size(); ++x) {
        for (std::size_t b = 0; b < sizeof(Index); ++b) {
            buf[x * sizeof(Index) + b] = static_cast<char>((values[x] >> (8 * b)) & 0xff);
        }
    }
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

template <typename Index>
std::vector<Index> read_values(std::istream& in, std::uint64_t n) {
    std::vector<Index> values;
    std::vector<unsigned char> buf(1 << 16);
    const std::size_t per_chunk = buf.size() / sizeof(Index);
    while (values.size() < n) {
        const std::size_t count = std::min<std::uint64_t>(per_chunk, n - values.size());
        if (!in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(count * sizeof(Index)))) {
            throw IntegrityError("truncated LYAR payload");
        }
        for (std::size_t x = 0; x < count; ++x) {
            Index v = 0;
            for (std::size_t b = sizeof(Index); b-- > 0;) v = static_cast<Index>((v << 8) | buf[x * sizeof(Index) + b]);
            values.push_back(v);
        }
    }
    return values;
}

} // namespace

void write_lyar(std::ostream& out, const LyndonArray& lambda) {
    out.write("LYAR", 4);
    out.put(static_cast<char>(kVersion));
    std::visit(
        [&](const auto& values) {
            using Index = typename std::decay_t<decltype(values)>::value_type;
            out.put(static_cast<char>(sizeof(Index)));
            put_u64(out, values.size());
            write_values(out, values);
        },
        lambda);
    if (!out) throw IoError("failed writing LYAR data");
}

LyndonArray read_lyar(std::istream& in) {
    expect_header(in, "LYAR");
    const int width = in.get();
    const std::uint64_t n = get_u64(in, "LYAR length");
    LyndonArray out;
    if (width == 4) {
        out = read_values<std::uint32_t>(in, n);
    } else if (width == 8) {
        out = read_values<std::uint64_t>(in, n);
    } else {
        throw IntegrityError("LYAR width byte must be 4 or 8");
    }
    expect_end(in, "LYAR payload");
    return out;
}

void write_lbps(std::ostream& out, const AppendOnlyBps& bps) {
    if (bps.size() < 2 || bps.size() % 2 != 0 || bps.unclosed() != 0) {
        throw UsageError("LBPS output needs a complete parentheses sequence");
    }
    out.write("LBPS", 4);
    out.put(static_cast<char>(kVersion));
    put_u64(out, bps.size() / 2 - 1);
    const auto words = bps.words();
    const std::size_t bytes = (bps.size() + 7) / 8;
    std::vector<char> buf(bytes);
    for (std::size_t k = 0; k < bytes; ++k) {
        buf[k] = static_cast<char>(reverse_byte(static_cast<std::uint8_t>(words[k / 8] >> (8 * (k % 8)))));
    }
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out) throw IoError("failed writing LBPS data");
}

SuccinctPssTree read_lbps(std::istream& in, BpsConfig config) {
    expect_header(in, "LBPS");
    const std::uint64_t n = get_u64(in, "LBPS length");
    if (n > AppendOnlyBps::kMaxBits / 2) throw IntegrityError("LBPS length out of range");
    const std::size_t bits = 2 * n + 2;
    const std::size_t bytes = (bits + 7) / 8;
    std::vector<unsigned char> buf(bytes);
    if (!in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(bytes))) {
        throw IntegrityError("truncated LBPS payload");
    }
    expect_end(in, "LBPS payload");
    if (bits % 8 != 0 && (buf.back() & (0xffu >> (bits % 8))) != 0) {
        throw IntegrityError("LBPS padding bits must be zero");
    }
    std::vector<std::uint64_t> words((bits + 63) / 64, 0);
    for (std::size_t k = 0; k < bytes; ++k) {
        words[k / 8] |= static_cast<std::uint64_t>(reverse_byte(buf[k])) << (8 * (k % 8));
    }
    return SuccinctPssTree::from_packed(words, n, config);
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    in.seekg(0, std::ios::end);
    const auto size = in.tellg();
    if (size < 0) throw IoError("cannot size " + path.string());
    in.seekg(0);
    std::vector<std::uint8_t> bytes(static_cast<std::size_t>(size));
    if (!bytes.empty() && !in.read(reinterpret_cast<char*>(bytes.data()), size)) {
        throw IoError("failed reading " + path.string());
    }
    return bytes;
}

void write_file(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot create " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("failed writing " + path.string());
}

std::vector<std::uint8_t> to_bytes(const LyndonArray& lambda) {
    std::ostringstream out(std::ios::binary);
    write_lyar(out, lambda);
    const std::string s = std::move(out).str();
    return {s.begin(), s.end()};
}

std::vector<std::uint8_t> to_bytes(const AppendOnlyBps& bps) {
    std::ostringstream out(std::ios::binary);
    write_lbps(out, bps);
    const std::string s = std::move(out).str();
    return {s.begin(), s.end()};
}

} // namespace lyndon::formats
