#include "anisoloc/gridio.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "anisoloc/errors.hpp"

namespace anisoloc::io {

namespace {

constexpr char kMagic[4] = {'A', 'G', 'R', 'D'};
constexpr std::uint32_t kVersion = 1;

template <class T>
void put(std::vector<unsigned char>& out, T v) {
    unsigned char b[sizeof(T)];
    std::memcpy(b, &v, sizeof(T));
    if constexpr (std::endian::native == std::endian::big) std::reverse(b, b + sizeof(T));
    out.insert(out.end(), b, b + sizeof(T));
}

template <class T>
T get(const std::vector<unsigned char>& in, std::size_t offset) {
    unsigned char b[sizeof(T)];
    std::memcpy(b, in.data() + offset, sizeof(T));
    if constexpr (std::endian::native == std::endian::big) std::reverse(b, b + sizeof(T));
    T v;
    std::memcpy(&v, b, sizeof(T));
    return v;
}

void put_header(std::vector<unsigned char>& out, const GridGeometry& g, bool complex) {
    validate_geometry(g);
    out.insert(out.end(), kMagic, kMagic + 4);
    put<std::uint32_t>(out, kVersion);
    put<std::uint32_t>(out, complex ? 1u : 0u);
    put<std::uint32_t>(out, static_cast<std::uint32_t>(g.nx));
    put<std::uint32_t>(out, static_cast<std::uint32_t>(g.ny));
    put<double>(out, g.dx);
    put<double>(out, g.dy);
    put<double>(out, g.origin.x());
    put<double>(out, g.origin.y());
}

void check_finite(double v, std::size_t index) {
    if (!std::isfinite(v)) throw DomainError("grid: non-finite sample at index " + std::to_string(index));
}

std::string fail_at(std::size_t offset, const std::string& what) {
    return "grid file: " + what + " at byte " + std::to_string(offset);
}

void write_bytes(const std::string& path, const char* data, std::size_t size) {
    const std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw FormatError("cannot open '" + tmp.string() + "' for writing");
        f.write(data, static_cast<std::streamsize>(size));
        if (!f) throw FormatError("write failed for '" + tmp.string() + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw FormatError("cannot rename '" + tmp.string() + "' to '" + path + "': " + ec.message());
    }
}

}  // namespace

std::vector<unsigned char> encode_grid(const RealGrid& g) {
    if (g.values.size() != g.geom.size()) throw DomainError("grid: value count does not match geometry");
    std::vector<unsigned char> out;
    out.reserve(kHeaderBytes + 8 * g.values.size());
    put_header(out, g.geom, false);
    for (std::size_t i = 0; i < g.values.size(); ++i) {
        check_finite(g.values[i], i);
        put<double>(out, g.values[i]);
    }
    return out;
}

std::vector<unsigned char> encode_grid(const ComplexGrid& g) {
    if (g.values.size() != g.geom.size()) throw DomainError("grid: value count does not match geometry");
    std::vector<unsigned char> out;
    out.reserve(kHeaderBytes + 16 * g.values.size());
    put_header(out, g.geom, true);
    for (std::size_t i = 0; i < g.values.size(); ++i) {
        check_finite(g.values[i].real(), i);
        check_finite(g.values[i].imag(), i);
        put<double>(out, g.values[i].real());
        put<double>(out, g.values[i].imag());
    }
    return out;
}

AnyGrid decode_grid(const std::vector<unsigned char>& bytes) {
    if (bytes.size() < kHeaderBytes)
        throw FormatError("grid file: header truncated: expected " + std::to_string(kHeaderBytes) + " bytes, found " +
                          std::to_string(bytes.size()));
    if (std::memcmp(bytes.data(), kMagic, 4) != 0) throw FormatError(fail_at(0, "bad magic (expected \"AGRD\")"));
    const auto version = get<std::uint32_t>(bytes, 4);
    if (version != kVersion) throw FormatError(fail_at(4, "unsupported version " + std::to_string(version)));
    const auto flags = get<std::uint32_t>(bytes, 8);
    if ((flags & ~1u) != 0u) throw FormatError(fail_at(8, "unknown flag bits"));
    const bool complex = (flags & 1u) != 0u;
    GridGeometry g;
    g.nx = get<std::uint32_t>(bytes, 12);
    g.ny = get<std::uint32_t>(bytes, 16);
    g.dx = get<double>(bytes, 20);
    g.dy = get<double>(bytes, 28);
    g.origin = Vec2(get<double>(bytes, 36), get<double>(bytes, 44));
    try {
        validate_geometry(g);
    } catch (const DomainError& e) {
        throw FormatError(fail_at(12, std::string("invalid geometry: ") + e.what()));
    }
    const std::size_t per = complex ? 16 : 8;
    const std::size_t expected = kHeaderBytes + per * g.size();
    if (bytes.size() < expected)
        throw FormatError("grid file: payload truncated: expected " + std::to_string(expected) + " bytes, found " +
                          std::to_string(bytes.size()));
    if (bytes.size() > expected)
        throw FormatError(fail_at(expected, "trailing bytes after payload (" + std::to_string(bytes.size() - expected) +
                                                " extra)"));
    auto value = [&](std::size_t i) {
        const std::size_t off = kHeaderBytes + 8 * i;
        const double v = get<double>(bytes, off);
        if (!std::isfinite(v)) throw FormatError(fail_at(off, "non-finite sample"));
        return v;
    };
    if (complex) {
        ComplexGrid out(g);
        for (std::size_t i = 0; i < g.size(); ++i) out.values[i] = {value(2 * i), value(2 * i + 1)};
        return out;
    }
    RealGrid out(g);
    for (std::size_t i = 0; i < g.size(); ++i) out.values[i] = value(i);
    return out;
}

void write_grid(const std::string& path, const RealGrid& g) {
    const auto bytes = encode_grid(g);
    write_bytes(path, reinterpret_cast<const char*>(bytes.data()), bytes.size());
}

void write_grid(const std::string& path, const ComplexGrid& g) {
    const auto bytes = encode_grid(g);
    write_bytes(path, reinterpret_cast<const char*>(bytes.data()), bytes.size());
}

AnyGrid read_grid(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw FormatError("cannot open grid file '" + path + "'");
    std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    try {
        return decode_grid(bytes);
    } catch (const FormatError& e) {
        throw FormatError(path + ": " + e.what());
    }
}

ComplexGrid read_complex_grid(const std::string& path) {
    AnyGrid g = read_grid(path);
    if (auto* c = std::get_if<ComplexGrid>(&g)) return std::move(*c);
    return to_complex(std::get<RealGrid>(g));
}

void write_text(const std::string& path, const std::string& content) { write_bytes(path, content.data(), content.size()); }

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows) {
    std::ostringstream out;
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_real(row[i]);
        out << '\n';
    }
    return out.str();
}

}  // namespace anisoloc::io
