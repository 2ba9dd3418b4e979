#pragma once

// Geometry-free simplicial meshes, their degree-of-freedom tables and the
// trace-matching check across shared faces.

#include <biform/basis.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace biform {

struct Mesh {
  std::vector<IndexSet> cells;
  std::vector<std::string> labels;  // optional, one per cell when present
  int cell_dim = 0;
  int vertex_bound = 0;  // largest vertex id; forms live on {0..vertex_bound}
};

/// Validates and builds a mesh from cell vertex lists. Cells are sorted;
/// repeated vertices, mixed dimensions, cells of dimension < 2 and empty
/// meshes raise Error(invalid_argument). Two cells with the same vertex set,
/// or a facet shared by more than two cells, raise Error(nonconforming_mesh)
/// naming the offending cell pair.
Mesh make_mesh(const std::vector<std::vector<int>>& cells,
               std::vector<std::string> labels = {});

/// {"schema":"biform-fe/1","cells":[[0,1,2,3],[1,2,3,4]],"labels":[...]}.
Mesh parse_mesh_json(std::string_view text);

struct DofRecord {
  IndexSet face;
  int dim = 0;
  std::int64_t count = 0;
  std::vector<std::size_t> owning_cells;
};

struct DofTable {
  int r = 0;
  std::vector<DofRecord> records;  // faces of dimension >= 2, by dimension then lex
  std::int64_t total = 0;
};

DofTable dof_table(const Mesh& mesh, int r);

struct ContinuityEntry {
  IndexSet face;
  std::size_t cell_a = 0;
  std::size_t cell_b = 0;
  std::size_t shape_functions = 0;  // basis elements with nonzero trace on the face
  std::size_t probes = 0;
  bool matched = true;
  std::string mismatch;  // first differing shape function and probe
};

struct ContinuityReport {
  std::vector<ContinuityEntry> entries;
  bool passed() const;
};

/// For each face of dimension >= 2 owned by two or more cells, and every
/// global shape function attached to a subface G of it, extends the bubble
/// function from G into each owning cell, traces back to the face and
/// compares exact values on lattice points times face-tangent probe tuples.
ContinuityReport check_continuity(const Mesh& mesh, int r);

}  // namespace biform
