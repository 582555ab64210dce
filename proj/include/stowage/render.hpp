#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include "stowage/model.hpp"

namespace stowage {

struct Rgb {
    std::uint8_t r = 0, g = 0, b = 0;
};

// Deck-plan palette. Unusable space is the reserved dark blue; empty usable
// cells are neutral; occupied cells take the cargo's category color.
inline constexpr Rgb kUnusableColor{0x00, 0x00, 0x60};
inline constexpr Rgb kEmptyColor{0xdc, 0xdc, 0xdc};

inline const std::vector<Rgb>& category_palette() {
    static const std::vector<Rgb> palette = {
        {0xe6, 0x19, 0x4b}, {0x3c, 0xb4, 0x4b}, {0xff, 0xe1, 0x19}, {0x43, 0x63, 0xd8},
        {0xf5, 0x82, 0x31}, {0x91, 0x1e, 0xb4}, {0x46, 0xf0, 0xf0}, {0xf0, 0x32, 0xe6},
        {0xbc, 0xf6, 0x0c}, {0xfa, 0xbe, 0xbe}, {0x00, 0x80, 0x80}, {0xe6, 0xbe, 0xff},
    };
    return palette;
}

inline Rgb category_color(std::int32_t category_id) {
    const auto& palette = category_palette();
    return palette[static_cast<std::size_t>(category_id) % palette.size()];
}

inline constexpr std::int32_t kCellPixels = 16;

namespace detail {

inline void put_u16(std::string& out, std::uint16_t v) {
    out.push_back(static_cast<char>(v & 0xff));
    out.push_back(static_cast<char>(v >> 8));
}
inline void put_u32(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

// Per-cell fill colors for one deck, row-major.
inline std::vector<Rgb> deck_colors(const Instance& instance, const Solution* solution,
                                    std::int32_t deck_index) {
    const std::int32_t per_deck = instance.rows() * instance.cols();
    const std::int32_t offset = (deck_index - 1) * per_deck;
    std::vector<Rgb> colors(per_deck);
    std::vector<std::int32_t> occupant(per_deck, -1);
    if (solution) {
        for (std::size_t i = 0; i < solution->size(); ++i) {
            const std::int32_t j = solution->cell_of_cargo[i];
            if (j == Solution::kUnassigned) continue;
            if (j >= offset && j < offset + per_deck)
                occupant[j - offset] = static_cast<std::int32_t>(i);
        }
    }
    for (std::int32_t local = 0; local < per_deck; ++local) {
        const Cell& cell = instance.cells()[offset + local];
        if (!cell.usable)
            colors[local] = kUnusableColor;
        else if (occupant[local] >= 0)
            colors[local] = category_color(instance.cargo_category(occupant[local]));
        else
            colors[local] = kEmptyColor;
    }
    return colors;
}

}  // namespace detail

// 24-bit uncompressed BMP of one deck, kCellPixels per cell, no grid lines.
// Identical inputs give identical bytes.
inline std::string render_deck_bmp(const Instance& instance, const Solution* solution,
                                   std::int32_t deck_index) {
    const std::int32_t width = instance.cols() * kCellPixels;
    const std::int32_t height = instance.rows() * kCellPixels;
    const std::int32_t row_bytes = (width * 3 + 3) / 4 * 4;
    const std::uint32_t data_size = static_cast<std::uint32_t>(row_bytes) * height;
    const std::uint32_t file_size = 54 + data_size;

    std::string out;
    out.reserve(file_size);
    out += "BM";
    detail::put_u32(out, file_size);
    detail::put_u32(out, 0);
    detail::put_u32(out, 54);
    detail::put_u32(out, 40);  // BITMAPINFOHEADER
    detail::put_u32(out, static_cast<std::uint32_t>(width));
    detail::put_u32(out, static_cast<std::uint32_t>(height));
    detail::put_u16(out, 1);
    detail::put_u16(out, 24);
    detail::put_u32(out, 0);
    detail::put_u32(out, data_size);
    detail::put_u32(out, 2835);  // 72 dpi
    detail::put_u32(out, 2835);
    detail::put_u32(out, 0);
    detail::put_u32(out, 0);

    const std::vector<Rgb> colors = detail::deck_colors(instance, solution, deck_index);
    // BMP rows are bottom-up
    for (std::int32_t y = height - 1; y >= 0; --y) {
        const std::int32_t cell_row = y / kCellPixels;
        std::size_t line_start = out.size();
        for (std::int32_t x = 0; x < width; ++x) {
            const Rgb c = colors[cell_row * instance.cols() + x / kCellPixels];
            out.push_back(static_cast<char>(c.b));
            out.push_back(static_cast<char>(c.g));
            out.push_back(static_cast<char>(c.r));
        }
        while (out.size() - line_start < static_cast<std::size_t>(row_bytes))
            out.push_back('\0');
    }
    return out;
}

inline std::string rgb_hex(const Rgb& c) {
    static const char* digits = "0123456789abcdef";
    std::string s = "#......";
    s[1] = digits[c.r >> 4];
    s[2] = digits[c.r & 15];
    s[3] = digits[c.g >> 4];
    s[4] = digits[c.g & 15];
    s[5] = digits[c.b >> 4];
    s[6] = digits[c.b & 15];
    return s;
}

// SVG companion of the BMP output, one rect per cell.
inline std::string render_deck_svg(const Instance& instance, const Solution* solution,
                                   std::int32_t deck_index) {
    const std::int32_t width = instance.cols() * kCellPixels;
    const std::int32_t height = instance.rows() * kCellPixels;
    const std::vector<Rgb> colors = detail::deck_colors(instance, solution, deck_index);
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                      std::to_string(width) + "\" height=\"" + std::to_string(height) + "\">\n";
    for (std::int32_t r = 0; r < instance.rows(); ++r) {
        for (std::int32_t c = 0; c < instance.cols(); ++c) {
            out += "<rect x=\"" + std::to_string(c * kCellPixels) + "\" y=\"" +
                   std::to_string(r * kCellPixels) + "\" width=\"" + std::to_string(kCellPixels) +
                   "\" height=\"" + std::to_string(kCellPixels) + "\" fill=\"" +
                   rgb_hex(colors[r * instance.cols() + c]) + "\"/>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

// One image file per deck: <prefix>_deck<p>.bmp (and .svg when requested).
// Returns the list of written paths.
inline std::vector<std::string> render_instance(const Instance& instance,
                                                const Solution* solution,
                                                const std::string& prefix, bool also_svg) {
    std::vector<std::string> written;
    for (const Deck& d : instance.decks()) {
        const std::string base = prefix + "_deck" + std::to_string(d.index);
        {
            std::ofstream out(base + ".bmp", std::ios::binary);
            if (!out) throw ValidationError("cannot write image file '" + base + ".bmp'");
            out << render_deck_bmp(instance, solution, d.index);
            written.push_back(base + ".bmp");
        }
        if (also_svg) {
            std::ofstream out(base + ".svg", std::ios::binary);
            if (!out) throw ValidationError("cannot write image file '" + base + ".svg'");
            out << render_deck_svg(instance, solution, d.index);
            written.push_back(base + ".svg");
        }
    }
    return written;
}

}  // namespace stowage
