#pragma once

#include <array>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "carbonlens/geogrid.hpp"

// Minimal GeoTIFF codec for the raster layers this pipeline exchanges.
// Reads classic TIFF (both byte orders), strip or tile layout, uncompressed,
// 8/16/32-bit integer or 32/64-bit float samples promoted to float32.
// Writes little-endian float32, planar layout, with ModelPixelScale/
// ModelTiepoint (or ModelTransformation when rotated), GeoKeyDirectory and
// GDAL_NODATA tags. Output bytes are a pure function of the grid.

namespace carbonlens {

namespace tiff {

constexpr std::uint16_t kImageWidth = 256;
constexpr std::uint16_t kImageLength = 257;
constexpr std::uint16_t kBitsPerSample = 258;
constexpr std::uint16_t kCompression = 259;
constexpr std::uint16_t kPhotometric = 262;
constexpr std::uint16_t kStripOffsets = 273;
constexpr std::uint16_t kSamplesPerPixel = 277;
constexpr std::uint16_t kRowsPerStrip = 278;
constexpr std::uint16_t kStripByteCounts = 279;
constexpr std::uint16_t kPlanarConfig = 284;
constexpr std::uint16_t kPredictor = 317;
constexpr std::uint16_t kTileWidth = 322;
constexpr std::uint16_t kTileLength = 323;
constexpr std::uint16_t kTileOffsets = 324;
constexpr std::uint16_t kTileByteCounts = 325;
constexpr std::uint16_t kExtraSamples = 338;
constexpr std::uint16_t kSampleFormat = 339;
constexpr std::uint16_t kModelPixelScale = 33550;
constexpr std::uint16_t kModelTiepoint = 33922;
constexpr std::uint16_t kModelTransformation = 34264;
constexpr std::uint16_t kGeoKeyDirectory = 34735;
constexpr std::uint16_t kGdalNodata = 42113;

constexpr std::uint16_t kTypeByte = 1;
constexpr std::uint16_t kTypeAscii = 2;
constexpr std::uint16_t kTypeShort = 3;
constexpr std::uint16_t kTypeLong = 4;
constexpr std::uint16_t kTypeDouble = 12;

inline std::size_t type_size(std::uint16_t t) {
    switch (t) {
        case kTypeByte:
        case kTypeAscii: return 1;
        case kTypeShort: return 2;
        case kTypeLong: return 4;
        case kTypeDouble: return 8;
        default: return 0;
    }
}

} // namespace tiff

namespace detail {

class TiffWriter {
public:
    explicit TiffWriter(bool tiled, int tile_size)
        : tiled_(tiled), tile_size_(tile_size) {}

    std::vector<std::uint8_t> encode(const GeoGrid& g) {
        require(g.width > 0 && g.height > 0 && g.channels > 0,
                "geotiff: cannot write empty grid");
        require(g.values.size() == g.size(), "geotiff: value buffer size ",
                g.values.size(), " != expected ", g.size());

        buf_.assign(8, 0);
        buf_[0] = 'I';
        buf_[1] = 'I';
        put16_at(2, 42);

        std::vector<std::uint32_t> chunk_offsets, chunk_counts;
        if (!tiled_) {
            for (int c = 0; c < g.channels; ++c) {
                chunk_offsets.push_back(static_cast<std::uint32_t>(buf_.size()));
                chunk_counts.push_back(static_cast<std::uint32_t>(g.plane() * 4));
                const float* plane = g.values.data() + c * g.plane();
                append_floats(plane, g.plane());
            }
        } else {
            const int tw = tile_size_, th = tile_size_;
            const int tx = (g.width + tw - 1) / tw, ty = (g.height + th - 1) / th;
            std::vector<float> tile(static_cast<std::size_t>(tw) * th);
            for (int c = 0; c < g.channels; ++c) {
                for (int j = 0; j < ty; ++j) {
                    for (int i = 0; i < tx; ++i) {
                        std::fill(tile.begin(), tile.end(), 0.0f);
                        for (int r = 0; r < th; ++r) {
                            const int row = j * th + r;
                            if (row >= g.height) break;
                            const int cols = std::min(tw, g.width - i * tw);
                            const float* src = g.values.data() +
                                (static_cast<std::size_t>(c) * g.height + row) * g.width +
                                static_cast<std::size_t>(i) * tw;
                            std::memcpy(tile.data() + static_cast<std::size_t>(r) * tw,
                                        src, cols * sizeof(float));
                        }
                        chunk_offsets.push_back(static_cast<std::uint32_t>(buf_.size()));
                        chunk_counts.push_back(static_cast<std::uint32_t>(tile.size() * 4));
                        append_floats(tile.data(), tile.size());
                    }
                }
            }
        }

        const std::uint16_t spp = static_cast<std::uint16_t>(g.channels);
        add_short_tag(tiff::kImageWidth, {static_cast<std::uint16_t>(g.width)});
        add_short_tag(tiff::kImageLength, {static_cast<std::uint16_t>(g.height)});
        add_short_tag(tiff::kBitsPerSample, std::vector<std::uint16_t>(spp, 32));
        add_short_tag(tiff::kCompression, {1});
        add_short_tag(tiff::kPhotometric, {1});
        if (!tiled_) {
            add_long_tag(tiff::kStripOffsets, chunk_offsets);
        }
        add_short_tag(tiff::kSamplesPerPixel, {spp});
        if (!tiled_) {
            add_long_tag(tiff::kRowsPerStrip, {static_cast<std::uint32_t>(g.height)});
            add_long_tag(tiff::kStripByteCounts, chunk_counts);
        }
        add_short_tag(tiff::kPlanarConfig, {2});
        if (tiled_) {
            add_long_tag(tiff::kTileWidth, {static_cast<std::uint32_t>(tile_size_)});
            add_long_tag(tiff::kTileLength, {static_cast<std::uint32_t>(tile_size_)});
            add_long_tag(tiff::kTileOffsets, chunk_offsets);
            add_long_tag(tiff::kTileByteCounts, chunk_counts);
        }
        if (spp > 1)
            add_short_tag(tiff::kExtraSamples,
                          std::vector<std::uint16_t>(spp - 1, 0));
        add_short_tag(tiff::kSampleFormat, std::vector<std::uint16_t>(spp, 3));

        const AffineTransform& t = g.transform;
        if (t.b == 0.0 && t.d == 0.0) {
            add_double_tag(tiff::kModelPixelScale, {t.a, -t.e, 0.0});
            add_double_tag(tiff::kModelTiepoint, {0.0, 0.0, 0.0, t.c, t.f, 0.0});
        } else {
            add_double_tag(tiff::kModelTransformation,
                           {t.a, t.b, 0.0, t.c, t.d, t.e, 0.0, t.f,
                            0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0});
        }
        add_short_tag(tiff::kGeoKeyDirectory, geokeys(g.crs));
        add_ascii_tag(tiff::kGdalNodata, format_nodata(g.nodata));

        write_ifd();
        return std::move(buf_);
    }

private:
    struct Entry {
        std::uint16_t tag, type;
        std::uint32_t count, value;
    };

    static std::vector<std::uint16_t> geokeys(const Crs& crs) {
        std::vector<std::array<std::uint16_t, 4>> keys;
        if (crs.is_utm()) {
            const std::uint16_t epsg =
                static_cast<std::uint16_t>((crs.north ? 32600 : 32700) + crs.zone);
            keys = {{1024, 0, 1, 1}, {1025, 0, 1, 1}, {3072, 0, 1, epsg}};
        } else {
            keys = {{1024, 0, 1, 2}, {1025, 0, 1, 1}, {2048, 0, 1, 4326}};
        }
        std::vector<std::uint16_t> dir = {1, 1, 0,
                                          static_cast<std::uint16_t>(keys.size())};
        for (const auto& k : keys) dir.insert(dir.end(), k.begin(), k.end());
        return dir;
    }

    static std::string format_nodata(float nodata) {
        char buf[48];
        std::snprintf(buf, sizeof buf, "%.9g", static_cast<double>(nodata));
        return buf;
    }

    void put16_at(std::size_t off, std::uint16_t v) {
        buf_[off] = static_cast<std::uint8_t>(v & 0xff);
        buf_[off + 1] = static_cast<std::uint8_t>(v >> 8);
    }
    void put32_at(std::size_t off, std::uint32_t v) {
        for (int i = 0; i < 4; ++i)
            buf_[off + i] = static_cast<std::uint8_t>((v >> (8 * i)) & 0xff);
    }
    void append16(std::uint16_t v) {
        buf_.resize(buf_.size() + 2);
        put16_at(buf_.size() - 2, v);
    }
    void append32(std::uint32_t v) {
        buf_.resize(buf_.size() + 4);
        put32_at(buf_.size() - 4, v);
    }
    void append_floats(const float* p, std::size_t n) {
        static_assert(sizeof(float) == 4);
        const std::size_t off = buf_.size();
        buf_.resize(off + n * 4);
        std::memcpy(buf_.data() + off, p, n * 4); // host is little-endian
    }

    void add_entry(std::uint16_t tag, std::uint16_t type, std::uint32_t count,
                   const std::uint8_t* payload, std::size_t bytes) {
        Entry e{tag, type, count, 0};
        if (bytes <= 4) {
            std::uint8_t inline_v[4] = {0, 0, 0, 0};
            std::memcpy(inline_v, payload, bytes);
            std::memcpy(&e.value, inline_v, 4);
        } else {
            if (buf_.size() % 2) buf_.push_back(0); // word-align payloads
            e.value = static_cast<std::uint32_t>(buf_.size());
            buf_.insert(buf_.end(), payload, payload + bytes);
        }
        entries_.push_back(e);
    }

    void add_short_tag(std::uint16_t tag, const std::vector<std::uint16_t>& v) {
        std::vector<std::uint8_t> raw(v.size() * 2);
        for (std::size_t i = 0; i < v.size(); ++i) {
            raw[2 * i] = static_cast<std::uint8_t>(v[i] & 0xff);
            raw[2 * i + 1] = static_cast<std::uint8_t>(v[i] >> 8);
        }
        add_entry(tag, tiff::kTypeShort, static_cast<std::uint32_t>(v.size()),
                  raw.data(), raw.size());
    }
    void add_long_tag(std::uint16_t tag, const std::vector<std::uint32_t>& v) {
        std::vector<std::uint8_t> raw(v.size() * 4);
        for (std::size_t i = 0; i < v.size(); ++i)
            for (int b = 0; b < 4; ++b)
                raw[4 * i + b] = static_cast<std::uint8_t>((v[i] >> (8 * b)) & 0xff);
        add_entry(tag, tiff::kTypeLong, static_cast<std::uint32_t>(v.size()),
                  raw.data(), raw.size());
    }
    void add_double_tag(std::uint16_t tag, const std::vector<double>& v) {
        std::vector<std::uint8_t> raw(v.size() * 8);
        std::memcpy(raw.data(), v.data(), raw.size());
        add_entry(tag, tiff::kTypeDouble, static_cast<std::uint32_t>(v.size()),
                  raw.data(), raw.size());
    }
    void add_ascii_tag(std::uint16_t tag, const std::string& s) {
        std::vector<std::uint8_t> raw(s.begin(), s.end());
        raw.push_back(0);
        add_entry(tag, tiff::kTypeAscii, static_cast<std::uint32_t>(raw.size()),
                  raw.data(), raw.size());
    }

    void write_ifd() {
        if (buf_.size() % 2) buf_.push_back(0);
        const std::uint32_t ifd_off = static_cast<std::uint32_t>(buf_.size());
        append16(static_cast<std::uint16_t>(entries_.size()));
        for (const Entry& e : entries_) {
            append16(e.tag);
            append16(e.type);
            append32(e.count);
            append32(e.value);
        }
        append32(0); // no next IFD
        put32_at(4, ifd_off);
    }

    bool tiled_;
    int tile_size_;
    std::vector<std::uint8_t> buf_;
    std::vector<Entry> entries_; // added in ascending tag order by callers
};

class TiffReader {
public:
    explicit TiffReader(std::vector<std::uint8_t> bytes) : buf_(std::move(bytes)) {}

    GeoGrid decode() {
        require(buf_.size() >= 8, "geotiff: file shorter than header");
        if (buf_[0] == 'I' && buf_[1] == 'I') big_endian_ = false;
        else if (buf_[0] == 'M' && buf_[1] == 'M') big_endian_ = true;
        else fail("geotiff: bad byte-order mark");
        require(get16(2) == 42, "geotiff: not a classic TIFF");
        parse_ifd(get32(4));

        const int width = static_cast<int>(scalar(tiff::kImageWidth));
        const int height = static_cast<int>(scalar(tiff::kImageLength));
        const int spp = static_cast<int>(scalar_or(tiff::kSamplesPerPixel, 1));
        require(width > 0 && height > 0 && spp > 0, "geotiff: bad dimensions");
        require(scalar_or(tiff::kCompression, 1) == 1,
                "geotiff: compressed files are not supported");
        require(scalar_or(tiff::kPredictor, 1) == 1,
                "geotiff: predictor is not supported");

        const auto bits = values(tiff::kBitsPerSample, {8});
        const auto formats = values(tiff::kSampleFormat,
                                    std::vector<std::uint32_t>(spp, 1));
        for (int s = 1; s < spp && s < static_cast<int>(bits.size()); ++s)
            require(bits[s] == bits[0], "geotiff: heterogeneous bit depths");
        const std::uint32_t bps = bits[0];
        const std::uint32_t fmt = formats[0];
        const std::size_t bytes_per_sample = bps / 8;
        require(bps == 8 || bps == 16 || bps == 32 || bps == 64,
                "geotiff: unsupported bit depth ", bps);

        GeoGrid g(width, height, spp);
        read_geo(g);

        const int planar = static_cast<int>(scalar_or(tiff::kPlanarConfig, 1));
        if (has(tiff::kTileOffsets)) {
            read_tiled(g, planar, bps, fmt, bytes_per_sample);
        } else {
            read_striped(g, planar, bps, fmt, bytes_per_sample);
        }
        return g;
    }

private:
    struct Field {
        std::uint16_t type = 0;
        std::uint32_t count = 0;
        std::uint32_t value = 0; // inline value or payload offset
        std::size_t entry_off = 0;
    };

    std::uint16_t get16(std::size_t off) const {
        require(off + 2 <= buf_.size(), "geotiff: truncated file");
        return big_endian_ ? static_cast<std::uint16_t>((buf_[off] << 8) | buf_[off + 1])
                           : static_cast<std::uint16_t>(buf_[off] | (buf_[off + 1] << 8));
    }
    std::uint32_t get32(std::size_t off) const {
        require(off + 4 <= buf_.size(), "geotiff: truncated file");
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i)
            v |= static_cast<std::uint32_t>(buf_[off + i])
                 << (big_endian_ ? 8 * (3 - i) : 8 * i);
        return v;
    }
    std::uint64_t get64(std::size_t off) const {
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i)
            v |= static_cast<std::uint64_t>(buf_[off + i])
                 << (big_endian_ ? 8 * (7 - i) : 8 * i);
        return v;
    }
    double get_double(std::size_t off) const {
        require(off + 8 <= buf_.size(), "geotiff: truncated file");
        const std::uint64_t raw = get64(off);
        double d;
        std::memcpy(&d, &raw, 8);
        return d;
    }

    void parse_ifd(std::uint32_t off) {
        const std::uint16_t n = get16(off);
        for (std::uint16_t i = 0; i < n; ++i) {
            const std::size_t e = off + 2 + i * 12u;
            Field f;
            const std::uint16_t tag = get16(e);
            f.type = get16(e + 2);
            f.count = get32(e + 4);
            f.value = get32(e + 8);
            f.entry_off = e;
            fields_[tag] = f;
        }
    }

    bool has(std::uint16_t tag) const { return fields_.count(tag) != 0; }

    // offset of the field's payload (inline when it fits in 4 bytes)
    std::size_t payload_off(const Field& f) const {
        const std::size_t bytes = tiff::type_size(f.type) * f.count;
        return bytes <= 4 ? f.entry_off + 8 : f.value;
    }

    std::uint32_t element(const Field& f, std::uint32_t i) const {
        const std::size_t off = payload_off(f) + tiff::type_size(f.type) * i;
        switch (f.type) {
            case tiff::kTypeByte: return buf_.at(off);
            case tiff::kTypeShort: return get16(off);
            case tiff::kTypeLong: return get32(off);
            default: fail("geotiff: unexpected type ", f.type, " for integer tag");
        }
    }

    std::uint32_t scalar(std::uint16_t tag) const {
        auto it = fields_.find(tag);
        require(it != fields_.end(), "geotiff: missing required tag ", tag);
        return element(it->second, 0);
    }
    std::uint32_t scalar_or(std::uint16_t tag, std::uint32_t def) const {
        auto it = fields_.find(tag);
        return it == fields_.end() ? def : element(it->second, 0);
    }
    std::vector<std::uint32_t> values(std::uint16_t tag,
                                      std::vector<std::uint32_t> def) const {
        auto it = fields_.find(tag);
        if (it == fields_.end()) return def;
        std::vector<std::uint32_t> out(it->second.count);
        for (std::uint32_t i = 0; i < it->second.count; ++i)
            out[i] = element(it->second, i);
        return out;
    }

    float sample_at(std::size_t off, std::uint32_t bps, std::uint32_t fmt) const {
        switch (bps) {
            case 8:
                return fmt == 2 ? static_cast<float>(static_cast<std::int8_t>(buf_.at(off)))
                                : static_cast<float>(buf_.at(off));
            case 16:
                return fmt == 2 ? static_cast<float>(static_cast<std::int16_t>(get16(off)))
                                : static_cast<float>(get16(off));
            case 32: {
                const std::uint32_t raw = get32(off);
                if (fmt == 3) {
                    float v;
                    std::memcpy(&v, &raw, 4);
                    return v;
                }
                return fmt == 2 ? static_cast<float>(static_cast<std::int32_t>(raw))
                                : static_cast<float>(raw);
            }
            case 64: {
                require(fmt == 3, "geotiff: 64-bit integer samples unsupported");
                return static_cast<float>(get_double(off));
            }
        }
        fail("geotiff: unsupported sample layout");
    }

    void read_striped(GeoGrid& g, int planar, std::uint32_t bps, std::uint32_t fmt,
                      std::size_t bysamp) {
        const auto offsets = values(tiff::kStripOffsets, {});
        require(!offsets.empty(), "geotiff: missing strip offsets");
        const std::uint32_t rps = scalar_or(tiff::kRowsPerStrip, 0xffffffffu);
        const std::uint32_t rows_per_strip = std::min<std::uint32_t>(rps, g.height);
        const std::uint32_t strips_per_plane =
            (g.height + rows_per_strip - 1) / rows_per_strip;

        for (std::uint32_t s = 0; s < offsets.size(); ++s) {
            const std::uint32_t plane = planar == 2 ? s / strips_per_plane : 0;
            const std::uint32_t strip = planar == 2 ? s % strips_per_plane : s;
            const int row0 = static_cast<int>(strip * rows_per_strip);
            const int rows = std::min<int>(rows_per_strip, g.height - row0);
            std::size_t off = offsets[s];
            for (int r = 0; r < rows; ++r) {
                for (int col = 0; col < g.width; ++col) {
                    if (planar == 1) {
                        for (int c = 0; c < g.channels; ++c) {
                            g.at(c, row0 + r, col) = sample_at(off, bps, fmt);
                            off += bysamp;
                        }
                    } else {
                        g.at(static_cast<int>(plane), row0 + r, col) =
                            sample_at(off, bps, fmt);
                        off += bysamp;
                    }
                }
            }
        }
    }

    void read_tiled(GeoGrid& g, int planar, std::uint32_t bps, std::uint32_t fmt,
                    std::size_t bysamp) {
        const auto offsets = values(tiff::kTileOffsets, {});
        const int tw = static_cast<int>(scalar(tiff::kTileWidth));
        const int th = static_cast<int>(scalar(tiff::kTileLength));
        require(tw > 0 && th > 0, "geotiff: bad tile size");
        const int tx = (g.width + tw - 1) / tw;
        const int ty = (g.height + th - 1) / th;
        const int tiles_per_plane = tx * ty;
        const int row_samples = planar == 1 ? tw * g.channels : tw;

        for (std::size_t idx = 0; idx < offsets.size(); ++idx) {
            const int plane = planar == 2 ? static_cast<int>(idx) / tiles_per_plane : 0;
            const int t = planar == 2 ? static_cast<int>(idx) % tiles_per_plane
                                      : static_cast<int>(idx);
            const int tile_row = (t / tx) * th;
            const int tile_col = (t % tx) * tw;
            for (int r = 0; r < th; ++r) {
                const int row = tile_row + r;
                if (row >= g.height) break;
                std::size_t off = offsets[idx] +
                                  static_cast<std::size_t>(r) * row_samples * bysamp;
                for (int i = 0; i < tw; ++i) {
                    const int col = tile_col + i;
                    if (col >= g.width) break;
                    if (planar == 1) {
                        std::size_t o = off + static_cast<std::size_t>(i) *
                                                  g.channels * bysamp;
                        for (int c = 0; c < g.channels; ++c) {
                            g.at(c, row, col) = sample_at(o, bps, fmt);
                            o += bysamp;
                        }
                    } else {
                        g.at(plane, row, col) =
                            sample_at(off + static_cast<std::size_t>(i) * bysamp,
                                      bps, fmt);
                    }
                }
            }
        }
    }

    void read_geo(GeoGrid& g) {
        if (has(tiff::kModelTransformation)) {
            const Field& f = fields_.at(tiff::kModelTransformation);
            require(f.count == 16, "geotiff: model transformation needs 16 values");
            const std::size_t off = payload_off(f);
            auto m = [&](int i) { return get_double(off + 8 * i); };
            g.transform = {m(0), m(1), m(3), m(4), m(5), m(7)};
        } else if (has(tiff::kModelPixelScale) && has(tiff::kModelTiepoint)) {
            const Field& ps = fields_.at(tiff::kModelPixelScale);
            const Field& tp = fields_.at(tiff::kModelTiepoint);
            require(ps.count >= 2 && tp.count >= 6, "geotiff: incomplete geo tags");
            const std::size_t pso = payload_off(ps), tpo = payload_off(tp);
            const double sx = get_double(pso), sy = get_double(pso + 8);
            const double pi = get_double(tpo), pj = get_double(tpo + 8);
            const double wx = get_double(tpo + 24), wy = get_double(tpo + 32);
            g.transform = {sx, 0.0, wx - sx * pi, 0.0, -sy, wy + sy * pj};
        } // else: keep identity transform

        if (has(tiff::kGeoKeyDirectory)) {
            const Field& f = fields_.at(tiff::kGeoKeyDirectory);
            require(f.count >= 4 && f.count % 4 == 0, "geotiff: bad geokey directory");
            std::uint16_t model = 0, epsg_geo = 0, epsg_proj = 0;
            for (std::uint32_t k = 4; k + 3 < f.count; k += 4) {
                const std::uint16_t key = static_cast<std::uint16_t>(element(f, k));
                const std::uint16_t loc = static_cast<std::uint16_t>(element(f, k + 1));
                const std::uint16_t val = static_cast<std::uint16_t>(element(f, k + 3));
                if (loc != 0) continue; // only inline short keys matter here
                if (key == 1024) model = val;
                if (key == 2048) epsg_geo = val;
                if (key == 3072) epsg_proj = val;
            }
            if (model == 2 || (model == 0 && epsg_geo != 0)) {
                require(epsg_geo == 0 || epsg_geo == 4326,
                        "geotiff: unsupported geographic CRS EPSG ", epsg_geo);
                g.crs = Crs::lonlat();
            } else if (model == 1 || epsg_proj != 0) {
                if (epsg_proj >= 32601 && epsg_proj <= 32660)
                    g.crs = Crs::utm(epsg_proj - 32600, true);
                else if (epsg_proj >= 32701 && epsg_proj <= 32760)
                    g.crs = Crs::utm(epsg_proj - 32700, false);
                else
                    fail("geotiff: unsupported projected CRS EPSG ", epsg_proj);
            }
        }

        if (has(tiff::kGdalNodata)) {
            const Field& f = fields_.at(tiff::kGdalNodata);
            const std::size_t off = payload_off(f);
            std::string s;
            for (std::uint32_t i = 0; i < f.count && buf_.at(off + i) != 0; ++i)
                s.push_back(static_cast<char>(buf_[off + i]));
            try {
                g.nodata = std::stof(s);
            } catch (const std::exception&) {
                fail("geotiff: unparseable nodata string '", s, "'");
            }
        }
    }

    std::vector<std::uint8_t> buf_;
    bool big_endian_ = false;
    std::map<std::uint16_t, Field> fields_;
};

} // namespace detail

struct GeoTiffWriteOptions {
    bool tiled = false;
    int tile_size = 256;
};

inline std::vector<std::uint8_t> encode_geotiff(const GeoGrid& g,
                                                const GeoTiffWriteOptions& opt = {}) {
    return detail::TiffWriter(opt.tiled, opt.tile_size).encode(g);
}

inline void write_geotiff(const std::filesystem::path& path, const GeoGrid& g,
                          const GeoTiffWriteOptions& opt = {}) {
    const auto bytes = encode_geotiff(g, opt);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    detail::require(out.good(), "geotiff: cannot open ", path.string(), " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    detail::require(out.good(), "geotiff: short write to ", path.string());
}

inline GeoGrid decode_geotiff(std::vector<std::uint8_t> bytes) {
    return detail::TiffReader(std::move(bytes)).decode();
}

inline GeoGrid read_geotiff(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    detail::require(in.good(), "geotiff: cannot open ", path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return decode_geotiff(std::move(bytes));
}

} // namespace carbonlens
