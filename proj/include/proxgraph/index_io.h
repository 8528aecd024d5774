#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <variant>
#include <vector>

#include "proxgraph/graph.h"

namespace proxgraph {

/// Binary index container; layout documented in docs/index_format.md.
inline constexpr char kIndexMagic[4] = {'P', 'X', 'G', 'I'};
inline constexpr std::uint32_t kIndexVersion = 1;

enum class IndexKind : std::uint32_t { flat = 0, layered = 1 };

/// Header of a serialized index. `dim` records the dataset dimensionality
/// the index was built for (0 when unknown).
struct IndexHeader {
    IndexKind kind = IndexKind::flat;
    std::uint32_t n = 0;
    std::uint32_t dim = 0;
    std::uint32_t max_degree = 0;
    node_id entry_point = 0;
};

using AnyGraph = std::variant<ProximityGraph, LayeredGraph>;

std::vector<std::uint8_t> encode_index(const ProximityGraph& g, std::uint32_t dim);
std::vector<std::uint8_t> encode_index(const LayeredGraph& g, std::uint32_t dim);

/// Throws CorruptIndexError for bad magic/version, truncation, neighbor ids
/// out of range, degree over the cap, or inconsistent layer membership.
AnyGraph decode_index(std::span<const std::uint8_t> bytes, IndexHeader* header = nullptr);

void save_index(const ProximityGraph& g, std::uint32_t dim, const std::filesystem::path& path);
void save_index(const LayeredGraph& g, std::uint32_t dim, const std::filesystem::path& path);
AnyGraph load_index(const std::filesystem::path& path, IndexHeader* header = nullptr);

}  // namespace proxgraph
