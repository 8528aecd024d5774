#include "proxgraph/vecs_io.h"

#include <bit>
#include <cstring>
#include <fstream>

namespace proxgraph {

static_assert(std::endian::native == std::endian::little, "little-endian hosts only");

std::size_t element_size(VecKind kind) {
    switch (kind) {
        case VecKind::fvecs: return 4;
        case VecKind::ivecs: return 4;
        case VecKind::bvecs: return 1;
    }
    return 4;
}

VecKind vec_kind_from_path(const std::filesystem::path& path) {
    const auto ext = path.extension().string();
    if (ext == ".fvecs") return VecKind::fvecs;
    if (ext == ".ivecs") return VecKind::ivecs;
    if (ext == ".bvecs") return VecKind::bvecs;
    throw ArgumentError("unrecognized vector file extension '" + ext + "'");
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    in.seekg(0, std::ios::end);
    const auto len = static_cast<std::size_t>(in.tellg());
    in.seekg(0);
    std::vector<std::uint8_t> bytes(len);
    if (len > 0 && !in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(len))) {
        throw IoError("read failed for " + path.string());
    }
    return bytes;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("write failed for " + path.string());
}

namespace {

// Walks the record stream and validates framing. Calls `emit(offset, dim)`
// with the payload offset of each record.
template <typename Emit>
std::size_t scan_records(std::span<const std::uint8_t> bytes, std::size_t elem, Emit&& emit) {
    if (bytes.empty()) throw FormatError("empty vector file", 0);
    std::size_t off = 0;
    std::int32_t first_dim = 0;
    std::size_t count = 0;
    while (off < bytes.size()) {
        if (bytes.size() - off < 4) throw FormatError("truncated dimension header", off);
        std::int32_t dim;
        std::memcpy(&dim, bytes.data() + off, 4);
        if (dim <= 0) throw FormatError("non-positive dimension " + std::to_string(dim), off);
        if (count == 0) {
            first_dim = dim;
        } else if (dim != first_dim) {
            throw FormatError("inconsistent dimension " + std::to_string(dim) + " (expected " +
                                      std::to_string(first_dim) + ")",
                              off);
        }
        const std::size_t payload = static_cast<std::size_t>(dim) * elem;
        if (bytes.size() - off - 4 < payload) throw FormatError("truncated record payload", off + 4);
        emit(off + 4, static_cast<std::size_t>(dim));
        off += 4 + payload;
        ++count;
    }
    return count;
}

}  // namespace

Dataset parse_vecs(std::span<const std::uint8_t> bytes, VecKind kind) {
    const std::size_t elem = element_size(kind);
    std::size_t d = 0;
    const std::size_t n = scan_records(bytes, elem, [&](std::size_t, std::size_t dim) { d = dim; });
    std::vector<float> values;
    values.reserve(n * d);
    scan_records(bytes, elem, [&](std::size_t off, std::size_t dim) {
        const std::uint8_t* p = bytes.data() + off;
        for (std::size_t j = 0; j < dim; ++j) {
            switch (kind) {
                case VecKind::fvecs: {
                    float f;
                    std::memcpy(&f, p + 4 * j, 4);
                    values.push_back(f);
                    break;
                }
                case VecKind::ivecs: {
                    std::int32_t v;
                    std::memcpy(&v, p + 4 * j, 4);
                    values.push_back(static_cast<float>(v));
                    break;
                }
                case VecKind::bvecs:
                    values.push_back(static_cast<float>(p[j]));
                    break;
            }
        }
    });
    try {
        return Dataset(n, d, std::move(values));
    } catch (const ArgumentError& e) {
        throw FormatError(e.what(), 0);
    }
}

Dataset load_vecs(const std::filesystem::path& path, VecKind kind) {
    return parse_vecs(read_file(path), kind);
}

IdTable parse_ivecs(std::span<const std::uint8_t> bytes) {
    IdTable t;
    t.rows = scan_records(bytes, 4, [&](std::size_t, std::size_t dim) { t.cols = dim; });
    t.values.reserve(t.rows * t.cols);
    scan_records(bytes, 4, [&](std::size_t off, std::size_t dim) {
        for (std::size_t j = 0; j < dim; ++j) {
            std::int32_t v;
            std::memcpy(&v, bytes.data() + off + 4 * j, 4);
            t.values.push_back(v);
        }
    });
    return t;
}

IdTable load_ivecs(const std::filesystem::path& path) { return parse_ivecs(read_file(path)); }

namespace {

void put_i32(std::vector<std::uint8_t>& out, std::int32_t v) {
    std::uint8_t b[4];
    std::memcpy(b, &v, 4);
    out.insert(out.end(), b, b + 4);
}

}  // namespace

std::vector<std::uint8_t> encode_fvecs(const Dataset& ds) {
    std::vector<std::uint8_t> out;
    out.reserve(ds.size() * (4 + 4 * ds.dim()));
    for (std::size_t i = 0; i < ds.size(); ++i) {
        put_i32(out, static_cast<std::int32_t>(ds.dim()));
        auto r = ds.row(static_cast<node_id>(i));
        const auto* p = reinterpret_cast<const std::uint8_t*>(r.data());
        out.insert(out.end(), p, p + 4 * r.size());
    }
    return out;
}

std::vector<std::uint8_t> encode_ivecs(const IdTable& table) {
    PROXGRAPH_EXPECT(table.values.size() == table.rows * table.cols, "table shape");
    std::vector<std::uint8_t> out;
    out.reserve(table.rows * (4 + 4 * table.cols));
    for (std::size_t i = 0; i < table.rows; ++i) {
        put_i32(out, static_cast<std::int32_t>(table.cols));
        for (auto v : table.row(i)) put_i32(out, v);
    }
    return out;
}

void save_fvecs(const Dataset& ds, const std::filesystem::path& path) { write_file(path, encode_fvecs(ds)); }

void save_ivecs(const IdTable& table, const std::filesystem::path& path) {
    write_file(path, encode_ivecs(table));
}

}  // namespace proxgraph
