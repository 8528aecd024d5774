#include "proxgraph/index_io.h"

#include <algorithm>
#include <cstring>
#include <string>

#include "proxgraph/vecs_io.h"

namespace proxgraph {

namespace {

class Writer {
 public:
    void u32(std::uint32_t v) { raw(&v, 4); }
    void u64(std::uint64_t v) { raw(&v, 8); }
    void raw(const void* p, std::size_t len) {
        const auto* b = static_cast<const std::uint8_t*>(p);
        out.insert(out.end(), b, b + len);
    }
    std::vector<std::uint8_t> out;
};

class Reader {
 public:
    explicit Reader(std::span<const std::uint8_t> b) : bytes_(b) {}

    std::uint32_t u32() {
        std::uint32_t v;
        take(&v, 4);
        return v;
    }
    std::uint64_t u64() {
        std::uint64_t v;
        take(&v, 8);
        return v;
    }
    void take(void* dst, std::size_t len) {
        if (bytes_.size() - off_ < len) {
            throw CorruptIndexError("truncated index at byte " + std::to_string(off_));
        }
        std::memcpy(dst, bytes_.data() + off_, len);
        off_ += len;
    }
    std::size_t remaining() const { return bytes_.size() - off_; }

 private:
    std::span<const std::uint8_t> bytes_;
    std::size_t off_ = 0;
};

void write_header(Writer& w, IndexKind kind, std::size_t n, std::uint32_t dim, std::size_t max_degree,
                  node_id ep, std::size_t layers) {
    w.raw(kIndexMagic, 4);
    w.u32(kIndexVersion);
    w.u32(static_cast<std::uint32_t>(kind));
    w.u32(static_cast<std::uint32_t>(n));
    w.u32(dim);
    w.u32(static_cast<std::uint32_t>(max_degree));
    w.u32(ep);
    w.u32(static_cast<std::uint32_t>(layers));
}

void write_layer(Writer& w, const ProximityGraph& g) {
    w.u32(g.entry_point());
    std::uint64_t off = 0;
    w.u64(off);
    for (std::size_t u = 0; u < g.size(); ++u) {
        off += g.neighbors(static_cast<node_id>(u)).size();
        w.u64(off);
    }
    for (std::size_t u = 0; u < g.size(); ++u) {
        for (node_id v : g.neighbors(static_cast<node_id>(u))) w.u32(v);
    }
    std::uint32_t tagged = 0;
    for (auto c : g.bridge_counts()) tagged += c > 0;
    w.u32(tagged);
    const auto counts = g.bridge_counts();
    for (std::size_t u = 0; u < counts.size(); ++u) {
        if (counts[u] > 0) {
            w.u32(static_cast<std::uint32_t>(u));
            w.u32(counts[u]);
        }
    }
}

ProximityGraph read_layer(Reader& r, std::size_t n, std::size_t max_degree,
                          const std::vector<std::uint32_t>* levels, std::size_t layer) {
    ProximityGraph g(n, max_degree);
    const node_id ep = r.u32();
    if (ep >= n || (levels && (*levels)[ep] < layer)) {
        throw CorruptIndexError("layer entry point out of range");
    }
    g.set_entry_point(ep);
    if (r.remaining() / 8 < n + 1) throw CorruptIndexError("truncated offset table");
    std::vector<std::uint64_t> offsets(n + 1);
    for (auto& o : offsets) o = r.u64();
    if (offsets[0] != 0) throw CorruptIndexError("offset table does not start at 0");
    for (std::size_t u = 0; u < n; ++u) {
        if (offsets[u + 1] < offsets[u]) throw CorruptIndexError("offsets not monotone");
    }
    if (r.remaining() / 4 < offsets[n]) throw CorruptIndexError("truncated adjacency");
    for (std::size_t u = 0; u < n; ++u) {
        std::vector<node_id> ids(offsets[u + 1] - offsets[u]);
        for (auto& id : ids) {
            id = r.u32();
            if (id >= n) throw CorruptIndexError("neighbor id " + std::to_string(id) + " >= n");
            if (levels && (*levels)[id] < layer) {
                throw CorruptIndexError("edge to a node outside layer " + std::to_string(layer));
            }
        }
        if (levels && (*levels)[u] < layer && !ids.empty()) {
            throw CorruptIndexError("non-member with edges in layer " + std::to_string(layer));
        }
        g.set_neighbors(static_cast<node_id>(u), std::move(ids));
    }
    const std::uint32_t tagged = r.u32();
    if (tagged > n) throw CorruptIndexError("bridge table larger than n");
    std::vector<std::uint32_t> bridges;
    if (tagged > 0) bridges.assign(n, 0);
    for (std::uint32_t i = 0; i < tagged; ++i) {
        const std::uint32_t u = r.u32();
        const std::uint32_t c = r.u32();
        if (u >= n || c == 0) throw CorruptIndexError("bad bridge record");
        bridges[u] = c;
    }
    g.set_bridge_counts(std::move(bridges));
    for (std::size_t u = 0; u < n; ++u) {
        const auto deg = g.neighbors(static_cast<node_id>(u)).size();
        if (deg > max_degree + g.bridges(static_cast<node_id>(u))) {
            throw CorruptIndexError("node " + std::to_string(u) + " has degree " + std::to_string(deg) +
                                    " over cap " + std::to_string(max_degree));
        }
    }
    return g;
}

}  // namespace

std::vector<std::uint8_t> encode_index(const ProximityGraph& g, std::uint32_t dim) {
    Writer w;
    write_header(w, IndexKind::flat, g.size(), dim, g.max_degree(), g.entry_point(), 1);
    write_layer(w, g);
    return std::move(w.out);
}

std::vector<std::uint8_t> encode_index(const LayeredGraph& g, std::uint32_t dim) {
    Writer w;
    const std::size_t m = g.num_layers() ? g.layer(0).max_degree() : 0;
    write_header(w, IndexKind::layered, g.size(), dim, m, g.entry_point(), g.num_layers());
    for (auto l : g.levels()) w.u32(l);
    for (std::size_t i = 0; i < g.num_layers(); ++i) write_layer(w, g.layer(i));
    return std::move(w.out);
}

AnyGraph decode_index(std::span<const std::uint8_t> bytes, IndexHeader* header) {
    Reader r(bytes);
    char magic[4];
    r.take(magic, 4);
    if (std::memcmp(magic, kIndexMagic, 4) != 0) throw CorruptIndexError("bad magic");
    const std::uint32_t version = r.u32();
    if (version != kIndexVersion) {
        throw CorruptIndexError("unsupported index version " + std::to_string(version));
    }
    IndexHeader h;
    const std::uint32_t kind = r.u32();
    if (kind > 1) throw CorruptIndexError("unknown index kind");
    h.kind = static_cast<IndexKind>(kind);
    h.n = r.u32();
    h.dim = r.u32();
    h.max_degree = r.u32();
    h.entry_point = r.u32();
    const std::uint32_t layers = r.u32();
    if (h.n == 0) throw CorruptIndexError("empty index");
    if (h.entry_point >= h.n) throw CorruptIndexError("entry point out of range");
    if (header) *header = h;

    if (h.kind == IndexKind::flat) {
        if (layers != 1) throw CorruptIndexError("flat index must have one layer");
        auto g = read_layer(r, h.n, h.max_degree, nullptr, 0);
        if (g.entry_point() != h.entry_point) throw CorruptIndexError("entry point mismatch");
        if (r.remaining() != 0) throw CorruptIndexError("trailing bytes");
        return g;
    }

    if (layers == 0 || layers > 64) throw CorruptIndexError("bad layer count");
    if (r.remaining() / 4 < h.n) throw CorruptIndexError("truncated level table");
    std::vector<std::uint32_t> levels(h.n);
    std::uint32_t top = 0;
    for (auto& l : levels) {
        l = r.u32();
        top = std::max(top, l);
    }
    if (top + 1 != layers) throw CorruptIndexError("level table disagrees with layer count");
    if (levels[h.entry_point] != top) throw CorruptIndexError("entry point not on top layer");
    LayeredGraph lg(levels, h.max_degree);
    for (std::uint32_t i = 0; i < layers; ++i) lg.layer(i) = read_layer(r, h.n, h.max_degree, &levels, i);
    lg.set_entry_point(h.entry_point);
    if (r.remaining() != 0) throw CorruptIndexError("trailing bytes");
    return lg;
}

void save_index(const ProximityGraph& g, std::uint32_t dim, const std::filesystem::path& path) {
    write_file(path, encode_index(g, dim));
}

void save_index(const LayeredGraph& g, std::uint32_t dim, const std::filesystem::path& path) {
    write_file(path, encode_index(g, dim));
}

AnyGraph load_index(const std::filesystem::path& path, IndexHeader* header) {
    return decode_index(read_file(path), header);
}

}  // namespace proxgraph
