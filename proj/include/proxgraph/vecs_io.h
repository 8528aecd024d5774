#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "proxgraph/dataset.h"

namespace proxgraph {

/// Element type of a TEXMEX-style vector file. Every record is a little-endian
/// int32 dimension followed by that many elements.
enum class VecKind { fvecs, ivecs, bvecs };

std::size_t element_size(VecKind kind);

/// Picks the kind from the file extension (.fvecs/.ivecs/.bvecs).
VecKind vec_kind_from_path(const std::filesystem::path& path);

/// Reads a whole file; ivecs and bvecs payloads are widened to float.
/// Throws FormatError with the offending byte offset on truncation,
/// inconsistent or non-positive dimension, or an empty file.
Dataset load_vecs(const std::filesystem::path& path, VecKind kind);
Dataset parse_vecs(std::span<const std::uint8_t> bytes, VecKind kind);

/// Integer rows (ground-truth tables). Same record layout as ivecs.
struct IdTable {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::int32_t> values;

    std::span<const std::int32_t> row(std::size_t i) const { return {values.data() + i * cols, cols}; }
    bool operator==(const IdTable&) const = default;
};

IdTable load_ivecs(const std::filesystem::path& path);
IdTable parse_ivecs(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> encode_fvecs(const Dataset& ds);
std::vector<std::uint8_t> encode_ivecs(const IdTable& table);

void save_fvecs(const Dataset& ds, const std::filesystem::path& path);
void save_ivecs(const IdTable& table, const std::filesystem::path& path);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace proxgraph
