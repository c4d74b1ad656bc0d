#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "carbonlens/common.hpp"
#include "carbonlens/utm.hpp"

namespace carbonlens {

/// Affine geotransform mapping pixel (col,row) to world (x,y):
///   x = a*col + b*row + c
///   y = d*col + e*row + f
/// Integer pixel coordinates address the upper-left corner of a pixel;
/// pixel centers sit at (col+0.5, row+0.5).
struct AffineTransform {
    double a = 1.0, b = 0.0, c = 0.0;
    double d = 0.0, e = 1.0, f = 0.0;

    static AffineTransform identity() { return {}; }

    /// North-up transform: pixel size (gsd_x, gsd_y), origin at the
    /// upper-left corner (origin_x, origin_y). gsd_y is positive; rows grow
    /// southward.
    static AffineTransform north_up(double origin_x, double origin_y,
                                    double gsd_x, double gsd_y) {
        return {gsd_x, 0.0, origin_x, 0.0, -gsd_y, origin_y};
    }

    double det() const { return a * e - b * d; }
    bool invertible() const { return det() != 0.0 && std::isfinite(det()); }

    void apply(double col, double row, double& x, double& y) const {
        x = a * col + b * row + c;
        y = d * col + e * row + f;
    }

    AffineTransform inverse() const {
        detail::require(invertible(), "transform: singular linear part");
        const double inv = 1.0 / det();
        AffineTransform t;
        t.a = e * inv;
        t.b = -b * inv;
        t.d = -d * inv;
        t.e = a * inv;
        t.c = -(t.a * c + t.b * f);
        t.f = -(t.d * c + t.e * f);
        return t;
    }

    bool operator==(const AffineTransform&) const = default;
};

/// Coordinate reference tag. Only geographic lon/lat and UTM/WGS-84 are
/// representable; anything else must be converted before ingestion.
struct Crs {
    enum class Kind : std::uint8_t { LonLat, Utm };
    Kind kind = Kind::LonLat;
    int zone = 0;      // UTM only
    bool north = true; // UTM only

    static Crs lonlat() { return {}; }
    static Crs utm(int zone, bool north = true) {
        detail::tm::check_zone(zone);
        return {Kind::Utm, zone, north};
    }
    bool is_utm() const { return kind == Kind::Utm; }
    bool operator==(const Crs&) const = default;
};

/// Pixel-space window. Offsets may be negative and the window may extend
/// past the grid; reads fill the uncovered part with nodata.
struct Window {
    std::int64_t col_off = 0;
    std::int64_t row_off = 0;
    int width = 0;
    int height = 0;
};

/// Georeferenced raster, 32-bit float samples, channel-major storage
/// (values[c][row][col]). Treated as immutable once built; all operations
/// below return new grids.
struct GeoGrid {
    int width = 0;
    int height = 0;
    int channels = 1;
    AffineTransform transform;
    Crs crs;
    float nodata = std::numeric_limits<float>::quiet_NaN();
    std::vector<float> values;

    GeoGrid() = default;
    GeoGrid(int w, int h, int c, float fill = 0.0f)
        : width(w), height(h), channels(c),
          values(static_cast<std::size_t>(w) * h * c, fill) {
        detail::require(w > 0 && h > 0 && c > 0, "geogrid: non-positive shape ",
                        w, "x", h, "x", c);
    }

    std::size_t plane() const { return static_cast<std::size_t>(width) * height; }
    std::size_t size() const { return plane() * channels; }

    float& at(int c, int row, int col) {
        return values[(static_cast<std::size_t>(c) * height + row) * width + col];
    }
    float at(int c, int row, int col) const {
        return values[(static_cast<std::size_t>(c) * height + row) * width + col];
    }

    bool is_nodata(float v) const {
        return v == nodata || (std::isnan(nodata) && std::isnan(v));
    }

    bool in_bounds(int row, int col) const {
        return row >= 0 && row < height && col >= 0 && col < width;
    }
};

inline void pixel_to_world(const GeoGrid& g, double col, double row,
                           double& x, double& y) {
    g.transform.apply(col, row, x, y);
}

inline void world_to_pixel(const GeoGrid& g, double x, double y,
                           double& col, double& row) {
    g.transform.inverse().apply(x, y, col, row);
}

/// Extract a window. Out-of-bounds pixels are filled with nodata; the
/// returned transform is translated so pixel (0,0) maps to the window
/// origin's world position.
inline GeoGrid read_window(const GeoGrid& g, const Window& w) {
    detail::require(w.width > 0 && w.height > 0, "read_window: empty window ",
                    w.width, "x", w.height);
    GeoGrid out(w.width, w.height, g.channels, g.nodata);
    out.crs = g.crs;
    out.nodata = g.nodata;
    out.transform = g.transform;
    g.transform.apply(static_cast<double>(w.col_off), static_cast<double>(w.row_off),
                      out.transform.c, out.transform.f);

    const std::int64_t row_lo = std::max<std::int64_t>(w.row_off, 0);
    const std::int64_t row_hi = std::min<std::int64_t>(w.row_off + w.height, g.height);
    const std::int64_t col_lo = std::max<std::int64_t>(w.col_off, 0);
    const std::int64_t col_hi = std::min<std::int64_t>(w.col_off + w.width, g.width);
    if (row_lo >= row_hi || col_lo >= col_hi) return out;

    for (int c = 0; c < g.channels; ++c) {
        for (std::int64_t r = row_lo; r < row_hi; ++r) {
            const float* src = g.values.data() +
                (static_cast<std::size_t>(c) * g.height + r) * g.width + col_lo;
            float* dst = out.values.data() +
                (static_cast<std::size_t>(c) * out.height + (r - w.row_off)) * out.width +
                (col_lo - w.col_off);
            std::copy(src, src + (col_hi - col_lo), dst);
        }
    }
    return out;
}

namespace detail {

/// Bilinear sample at pixel-center coordinates (x, y): (0,0) is the center
/// of pixel (0,0). nodata neighbors are dropped and the remaining weights
/// renormalized; returns nodata when all four neighbors are invalid.
inline float sample_bilinear(const GeoGrid& g, int ch, double x, double y) {
    const double cx = std::clamp(x, 0.0, static_cast<double>(g.width - 1));
    const double cy = std::clamp(y, 0.0, static_cast<double>(g.height - 1));
    const int x0 = static_cast<int>(std::floor(cx));
    const int y0 = static_cast<int>(std::floor(cy));
    const int x1 = std::min(x0 + 1, g.width - 1);
    const int y1 = std::min(y0 + 1, g.height - 1);
    const double fx = cx - x0;
    const double fy = cy - y0;

    const float v00 = g.at(ch, y0, x0), v01 = g.at(ch, y0, x1);
    const float v10 = g.at(ch, y1, x0), v11 = g.at(ch, y1, x1);
    const double w00 = (1 - fx) * (1 - fy), w01 = fx * (1 - fy);
    const double w10 = (1 - fx) * fy, w11 = fx * fy;

    double acc = 0.0, wsum = 0.0;
    if (!g.is_nodata(v00)) { acc += w00 * v00; wsum += w00; }
    if (!g.is_nodata(v01)) { acc += w01 * v01; wsum += w01; }
    if (!g.is_nodata(v10)) { acc += w10 * v10; wsum += w10; }
    if (!g.is_nodata(v11)) { acc += w11 * v11; wsum += w11; }
    if (wsum <= 0.0) return g.nodata;
    return static_cast<float>(acc / wsum);
}

inline float sample_nearest(const GeoGrid& g, int ch, double x, double y) {
    const int col = std::clamp(static_cast<int>(std::lround(x)), 0, g.width - 1);
    const int row = std::clamp(static_cast<int>(std::lround(y)), 0, g.height - 1);
    return g.at(ch, row, col);
}

} // namespace detail

/// Pixel-center-aligned bilinear resampling: output pixel j on an axis
/// samples input coordinate (j+0.5)*(in/out)-0.5, clamped to [0, in-1].
/// The transform is rescaled so the world extent is unchanged.
inline GeoGrid bilinear_resample(const GeoGrid& g, int out_w, int out_h) {
    detail::require(out_w > 0 && out_h > 0, "bilinear_resample: output size ",
                    out_w, "x", out_h, " must be positive");
    GeoGrid out(out_w, out_h, g.channels);
    out.crs = g.crs;
    out.nodata = g.nodata;
    out.transform = g.transform;
    const double sx = static_cast<double>(g.width) / out_w;
    const double sy = static_cast<double>(g.height) / out_h;
    out.transform.a = g.transform.a * sx;
    out.transform.b = g.transform.b * sy;
    out.transform.d = g.transform.d * sx;
    out.transform.e = g.transform.e * sy;

    for (int c = 0; c < g.channels; ++c) {
        for (int r = 0; r < out_h; ++r) {
            const double y = std::clamp((r + 0.5) * sy - 0.5, 0.0,
                                        static_cast<double>(g.height - 1));
            for (int col = 0; col < out_w; ++col) {
                const double x = std::clamp((col + 0.5) * sx - 0.5, 0.0,
                                            static_cast<double>(g.width - 1));
                out.at(c, r, col) = detail::sample_bilinear(g, c, x, y);
            }
        }
    }
    return out;
}

/// Resample a count/mass layer and rescale so the per-channel total is
/// preserved (relative error <= 1e-6). A zero intermediate total yields an
/// all-zero channel.
inline GeoGrid mass_conserving_resample(const GeoGrid& g, int out_w, int out_h) {
    for (std::size_t i = 0; i < g.values.size(); ++i) {
        const float v = g.values[i];
        if (!g.is_nodata(v))
            detail::require(v >= 0.0f, "mass_conserving_resample: negative value ",
                            v, " at flat index ", i);
    }
    GeoGrid out = bilinear_resample(g, out_w, out_h);
    for (int c = 0; c < g.channels; ++c) {
        KahanSum in_sum, mid_sum;
        for (std::size_t i = 0; i < g.plane(); ++i) {
            const float v = g.values[c * g.plane() + i];
            if (!g.is_nodata(v)) in_sum.add(v);
        }
        for (std::size_t i = 0; i < out.plane(); ++i) {
            const float v = out.values[c * out.plane() + i];
            if (!out.is_nodata(v)) mid_sum.add(v);
        }
        float* plane = out.values.data() + c * out.plane();
        if (mid_sum.value() <= 0.0) {
            std::fill(plane, plane + out.plane(), 0.0f);
            continue;
        }
        const double scale = in_sum.value() / mid_sum.value();
        for (std::size_t i = 0; i < out.plane(); ++i)
            if (!out.is_nodata(plane[i]))
                plane[i] = static_cast<float>(plane[i] * scale);
    }
    return out;
}

enum class ResampleMode { Nearest, Bilinear };

namespace detail {

/// Convert a world point between the supported CRS pairs. UTM<->UTM with
/// different zones round-trips through lon/lat.
inline void convert_point(const Crs& from, const Crs& to, double x, double y,
                          double& ox, double& oy) {
    if (from == to) { ox = x; oy = y; return; }
    double lon, lat;
    if (from.is_utm()) {
        LonLat ll = utm_to_lonlat(x, y, from.zone, from.north);
        lon = ll.lon; lat = ll.lat;
    } else {
        lon = x; lat = y;
    }
    if (to.is_utm()) {
        UtmPoint p = lonlat_to_utm(lon, lat, to.zone, to.north);
        ox = p.easting; oy = p.northing;
    } else {
        ox = lon; oy = lat;
    }
}

} // namespace detail

/// Resample src onto ref's grid: for each ref pixel center, convert to src
/// pixel coordinates and sample. Pixels whose centers fall outside src's
/// raster extent become nodata.
inline GeoGrid coregister(const GeoGrid& src, const GeoGrid& ref, ResampleMode mode) {
    GeoGrid out(ref.width, ref.height, src.channels);
    out.transform = ref.transform;
    out.crs = ref.crs;
    out.nodata = src.nodata;

    const AffineTransform inv = src.transform.inverse();
    const bool same_crs = src.crs == ref.crs;
    for (int r = 0; r < ref.height; ++r) {
        for (int col = 0; col < ref.width; ++col) {
            double wx, wy;
            ref.transform.apply(col + 0.5, r + 0.5, wx, wy);
            if (!same_crs) {
                double cx, cy;
                detail::convert_point(ref.crs, src.crs, wx, wy, cx, cy);
                wx = cx; wy = cy;
            }
            double px, py;
            inv.apply(wx, wy, px, py);
            // containment against the pixel footprint extent [0,w]x[0,h]
            const bool inside = px >= 0.0 && px <= src.width &&
                                py >= 0.0 && py <= src.height;
            for (int c = 0; c < src.channels; ++c) {
                float v = src.nodata;
                if (inside) {
                    v = mode == ResampleMode::Nearest
                            ? detail::sample_nearest(src, c, px - 0.5, py - 0.5)
                            : detail::sample_bilinear(src, c, px - 0.5, py - 0.5);
                }
                out.at(c, r, col) = v;
            }
        }
    }
    return out;
}

/// Blank-region mask: 0 where every channel is exactly 0 or nodata, else 1.
inline GeoGrid blank_mask(const GeoGrid& rgb) {
    detail::require(rgb.channels >= 1, "blank_mask: grid has no channels");
    GeoGrid mask(rgb.width, rgb.height, 1);
    mask.transform = rgb.transform;
    mask.crs = rgb.crs;
    for (int r = 0; r < rgb.height; ++r) {
        for (int col = 0; col < rgb.width; ++col) {
            bool blank = true;
            for (int c = 0; c < rgb.channels && blank; ++c) {
                const float v = rgb.at(c, r, col);
                blank = v == 0.0f || rgb.is_nodata(v);
            }
            mask.at(0, r, col) = blank ? 0.0f : 1.0f;
        }
    }
    return mask;
}

} // namespace carbonlens
