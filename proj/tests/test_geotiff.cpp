#include "catch_amalgamated.hpp"

#include "carbonlens/geotiff.hpp"

#include <cstring>
#include <filesystem>

using namespace carbonlens;

namespace {

GeoGrid sample_grid() {
    GeoGrid g(7, 5, 3);
    g.transform = {10, 0, 600000, 0, -10, 5090220};
    g.crs = Crs::utm(16, true);
    Rng rng(3);
    for (auto& v : g.values) v = static_cast<float>(uniform_real(rng, -5.0, 5.0));
    g.values[4] = g.nodata;
    return g;
}

// Hand-built minimal TIFF encoder, written straight from the TIFF 6.0 spec as
// an independent check of the library reader. Chunky interleave, one strip,
// selectable endianness and sample type.
struct MiniTiff {
    bool big_endian = false;
    int width = 0, height = 0, channels = 1;
    std::uint16_t bits = 16, fmt = 1;
    std::vector<double> samples; // interleaved, length w*h*c

    void put16(std::vector<std::uint8_t>& b, std::uint16_t v) const {
        if (big_endian) { b.push_back(v >> 8); b.push_back(v & 0xff); }
        else { b.push_back(v & 0xff); b.push_back(v >> 8); }
    }
    void put32(std::vector<std::uint8_t>& b, std::uint32_t v) const {
        if (big_endian) for (int i = 3; i >= 0; --i) b.push_back((v >> (8 * i)) & 0xff);
        else for (int i = 0; i < 4; ++i) b.push_back((v >> (8 * i)) & 0xff);
    }
    void put_sample(std::vector<std::uint8_t>& b, double v) const {
        if (bits == 8) b.push_back(static_cast<std::uint8_t>(v));
        else if (bits == 16) put16(b, static_cast<std::uint16_t>(static_cast<std::int32_t>(v)));
        else if (fmt == 3) {
            float f = static_cast<float>(v);
            std::uint32_t raw;
            std::memcpy(&raw, &f, 4);
            put32(b, raw);
        } else put32(b, static_cast<std::uint32_t>(static_cast<std::int64_t>(v)));
    }

    std::vector<std::uint8_t> build() const {
        std::vector<std::uint8_t> data;
        for (double s : samples) put_sample(data, s);

        std::vector<std::uint8_t> out;
        out.push_back(big_endian ? 'M' : 'I');
        out.push_back(big_endian ? 'M' : 'I');
        put16(out, 42);
        const std::uint32_t data_off = 8;
        put32(out, static_cast<std::uint32_t>(data_off + data.size())); // IFD offset
        out.insert(out.end(), data.begin(), data.end());

        struct E { std::uint16_t tag, type; std::uint32_t count, value; };
        std::vector<E> es = {
            {256, 3, 1, static_cast<std::uint32_t>(width)},
            {257, 3, 1, static_cast<std::uint32_t>(height)},
            {258, 3, 1, bits},
            {259, 3, 1, 1},
            {262, 3, 1, 1},
            {273, 4, 1, data_off},
            {277, 3, 1, static_cast<std::uint32_t>(channels)},
            {278, 3, 1, static_cast<std::uint32_t>(height)},
            {279, 4, 1, static_cast<std::uint32_t>(data.size())},
            {284, 3, 1, 1},
            {339, 3, 1, fmt},
        };
        put16(out, static_cast<std::uint16_t>(es.size()));
        for (const E& e : es) {
            put16(out, e.tag);
            put16(out, e.type);
            put32(out, e.count);
            if (e.type == 3) { put16(out, static_cast<std::uint16_t>(e.value)); put16(out, 0); }
            else put32(out, e.value);
        }
        put32(out, 0);
        return out;
    }
};

} // namespace

TEST_CASE("geotiff float round trip is lossless") {
    GeoGrid g = sample_grid();
    GeoGrid r = decode_geotiff(encode_geotiff(g));
    CHECK(r.width == g.width);
    CHECK(r.height == g.height);
    CHECK(r.channels == g.channels);
    CHECK(r.transform == g.transform);
    CHECK(r.crs == g.crs);
    CHECK(std::isnan(r.nodata));
    REQUIRE(r.values.size() == g.values.size());
    for (std::size_t i = 0; i < g.values.size(); ++i) {
        if (g.is_nodata(g.values[i])) CHECK(r.is_nodata(r.values[i]));
        else CHECK(r.values[i] == g.values[i]);
    }
}

TEST_CASE("geotiff tiled layout round trip") {
    GeoGrid g = sample_grid();
    GeoTiffWriteOptions opt;
    opt.tiled = true;
    opt.tile_size = 4; // forces partial tiles on both axes
    GeoGrid r = decode_geotiff(encode_geotiff(g, opt));
    REQUIRE(r.values.size() == g.values.size());
    for (std::size_t i = 0; i < g.values.size(); ++i)
        if (!g.is_nodata(g.values[i])) CHECK(r.values[i] == g.values[i]);
    CHECK(r.transform == g.transform);
}

TEST_CASE("geotiff encoding is byte-identical across saves") {
    GeoGrid g = sample_grid();
    CHECK(encode_geotiff(g) == encode_geotiff(g));
}

TEST_CASE("geotiff preserves explicit nodata and lonlat crs") {
    GeoGrid g(3, 3, 1);
    g.transform = {0.01, 0, -95.0, 0, -0.01, 42.0};
    g.crs = Crs::lonlat();
    g.nodata = -9999.0f;
    g.values[0] = -9999.0f;
    GeoGrid r = decode_geotiff(encode_geotiff(g));
    CHECK(r.crs == Crs::lonlat());
    CHECK(r.nodata == -9999.0f);
    CHECK(r.transform == g.transform);
}

TEST_CASE("geotiff stores rotated transforms via the matrix tag") {
    GeoGrid g(4, 4, 1);
    g.transform = {9.8, 1.9, 600000, -1.9, -9.8, 5090220};
    g.crs = Crs::utm(15);
    GeoGrid r = decode_geotiff(encode_geotiff(g));
    CHECK(r.transform == g.transform);
}

TEST_CASE("geotiff reads integer samples promoted to float") {
    MiniTiff t;
    t.width = 3;
    t.height = 2;
    t.channels = 2;
    t.bits = 16;
    t.fmt = 1;
    t.samples = {0, 10, 1, 11, 2, 12, 3, 13, 4, 14, 5, 15}; // interleaved pairs
    GeoGrid g = decode_geotiff(t.build());
    REQUIRE(g.channels == 2);
    // channel-major output from chunky input
    CHECK(g.at(0, 0, 0) == 0.0f);
    CHECK(g.at(1, 0, 0) == 10.0f);
    CHECK(g.at(0, 1, 2) == 5.0f);
    CHECK(g.at(1, 1, 2) == 15.0f);
}

TEST_CASE("geotiff reads big-endian files") {
    MiniTiff t;
    t.big_endian = true;
    t.width = 2;
    t.height = 2;
    t.bits = 32;
    t.fmt = 3;
    t.samples = {1.5, -2.5, 3.25, 65536.0};
    GeoGrid g = decode_geotiff(t.build());
    CHECK(g.at(0, 0, 0) == 1.5f);
    CHECK(g.at(0, 0, 1) == -2.5f);
    CHECK(g.at(0, 1, 0) == 3.25f);
    CHECK(g.at(0, 1, 1) == 65536.0f);
}

TEST_CASE("geotiff rejects truncated and corrupt input") {
    GeoGrid g = sample_grid();
    auto bytes = encode_geotiff(g);
    bytes.resize(bytes.size() / 2);
    CHECK_THROWS_AS(decode_geotiff(bytes), Error);

    std::vector<std::uint8_t> junk = {'X', 'Y', 1, 2, 3, 4, 5, 6};
    CHECK_THROWS_AS(decode_geotiff(junk), Error);
}

TEST_CASE("geotiff file io") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "carbonlens_tiff_test";
    fs::create_directories(dir);
    GeoGrid g = sample_grid();
    write_geotiff(dir / "a.tif", g);
    GeoGrid r = read_geotiff(dir / "a.tif");
    CHECK(r.values.size() == g.values.size());
    CHECK_THROWS_AS(read_geotiff(dir / "missing.tif"), Error);
    fs::remove_all(dir);
}
