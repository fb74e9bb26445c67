#pragma once

#include <string>
#include <variant>
#include <vector>

#include "anisoloc/grid.hpp"

namespace anisoloc::io {

// "AGRD" | u32 version = 1 | u32 flags (bit 0 complex) | u32 nx | u32 ny |
// f64 dx, dy, ox, oy | payload f64[nx*ny] or interleaved (re, im) pairs. Little-endian.
inline constexpr std::size_t kHeaderBytes = 52;

using AnyGrid = std::variant<RealGrid, ComplexGrid>;

std::vector<unsigned char> encode_grid(const RealGrid& g);
std::vector<unsigned char> encode_grid(const ComplexGrid& g);
AnyGrid decode_grid(const std::vector<unsigned char>& bytes);

// Written to a temporary sibling and renamed into place.
void write_grid(const std::string& path, const RealGrid& g);
void write_grid(const std::string& path, const ComplexGrid& g);

AnyGrid read_grid(const std::string& path);
// Real files are promoted to complex.
ComplexGrid read_complex_grid(const std::string& path);

// Atomic text write (temp + rename).
void write_text(const std::string& path, const std::string& content);

// 17 significant digits.
std::string format_real(double v);

// Comma-separated rows with a header line.
std::string csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows);

}  // namespace anisoloc::io
