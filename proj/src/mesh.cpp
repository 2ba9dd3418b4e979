#include <biform/mesh.hpp>
#include <biform/oracle.hpp>
#include <biform/serialize.hpp>

#include <algorithm>
#include <map>

namespace biform {

namespace {

std::string cell_name(const Mesh& mesh, std::size_t i) {
  std::string s = "cell " + std::to_string(i);
  if (!mesh.labels.empty()) s += " (" + mesh.labels[i] + ")";
  return s + " {" + mesh.cells[i].str() + "}";
}

// Faces of dimension >= 2 of every cell, with the cells containing them.
std::map<IndexSet, std::vector<std::size_t>> face_owners(const Mesh& mesh) {
  std::map<IndexSet, std::vector<std::size_t>> owners;
  for (std::size_t c = 0; c < mesh.cells.size(); ++c)
    for (std::size_t k = 3; k <= mesh.cells[c].size(); ++k)
      for (auto& f : subsets(mesh.cells[c], k)) owners[std::move(f)].push_back(c);
  return owners;
}

bool by_dim_then_lex(const IndexSet& a, const IndexSet& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

}  // namespace

Mesh make_mesh(const std::vector<std::vector<int>>& cells, std::vector<std::string> labels) {
  if (cells.empty()) fail(ErrorCode::invalid_argument, "mesh has no cells");
  if (!labels.empty() && labels.size() != cells.size())
    fail(ErrorCode::invalid_argument, "mesh has " + std::to_string(labels.size()) + " labels for " +
                                          std::to_string(cells.size()) + " cells");
  Mesh mesh;
  mesh.labels = std::move(labels);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].empty()) fail(ErrorCode::invalid_argument, "cell " + std::to_string(i) + " is empty");
    try {
      mesh.cells.emplace_back(cells[i]);
    } catch (const Error& e) {
      fail(ErrorCode::invalid_argument, "cell " + std::to_string(i) + ": " + e.what());
    }
  }
  mesh.cell_dim = static_cast<int>(mesh.cells.front().size()) - 1;
  for (std::size_t i = 0; i < mesh.cells.size(); ++i) {
    if (static_cast<int>(mesh.cells[i].size()) - 1 != mesh.cell_dim)
      fail(ErrorCode::invalid_argument, "cells of mixed dimension: " + cell_name(mesh, 0) + " and " +
                                            cell_name(mesh, i));
    mesh.vertex_bound = std::max(mesh.vertex_bound, mesh.cells[i].back());
  }
  if (mesh.cell_dim < 2) fail(ErrorCode::invalid_argument, "cells must have dimension >= 2");

  std::map<IndexSet, std::size_t> seen;
  for (std::size_t i = 0; i < mesh.cells.size(); ++i) {
    auto [it, inserted] = seen.emplace(mesh.cells[i], i);
    if (!inserted)
      fail(ErrorCode::nonconforming_mesh, "duplicate cells: " + cell_name(mesh, it->second) + " and " +
                                              cell_name(mesh, i));
  }
  std::map<IndexSet, std::vector<std::size_t>> facet_owners;
  for (std::size_t i = 0; i < mesh.cells.size(); ++i)
    for (auto& f : subsets(mesh.cells[i], mesh.cells[i].size() - 1)) {
      auto& owners = facet_owners[std::move(f)];
      owners.push_back(i);
      if (owners.size() > 2)
        fail(ErrorCode::nonconforming_mesh, "facet shared by more than two cells: " + cell_name(mesh, owners[0]) +
                                                " and " + cell_name(mesh, i));
    }
  return mesh;
}

Mesh parse_mesh_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::parse_error, std::string("mesh is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) fail(ErrorCode::parse_error, "mesh JSON must be an object");
  if (j.contains("schema") && j["schema"] != kSchema)
    fail(ErrorCode::parse_error, "unsupported mesh schema " + j["schema"].dump());
  if (!j.contains("cells") || !j["cells"].is_array()) fail(ErrorCode::parse_error, "mesh JSON needs a \"cells\" array");
  std::vector<std::vector<int>> cells;
  for (const auto& cell : j["cells"]) {
    if (!cell.is_array()) fail(ErrorCode::parse_error, "each cell must be an array of vertex ids");
    std::vector<int> ids;
    for (const auto& v : cell) {
      if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 1'000'000)
        fail(ErrorCode::parse_error, "vertex ids must be nonnegative integers, got " + v.dump());
      ids.push_back(v.get<int>());
    }
    cells.push_back(std::move(ids));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) fail(ErrorCode::parse_error, "\"labels\" must be an array");
    for (const auto& l : j["labels"]) labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
  }
  return make_mesh(cells, std::move(labels));
}

DofTable dof_table(const Mesh& mesh, int r) {
  if (r < 0) fail(ErrorCode::invalid_argument, "polynomial degree must be >= 0");
  DofTable table;
  table.r = r;
  for (auto& [face, owners] : face_owners(mesh)) {
    const int m = static_cast<int>(face.size()) - 1;
    table.records.push_back(DofRecord{face, m, bubble_count(m, r), owners});
    table.total += table.records.back().count;
  }
  std::sort(table.records.begin(), table.records.end(),
            [](const DofRecord& a, const DofRecord& b) { return by_dim_then_lex(a.face, b.face); });
  return table;
}

bool ContinuityReport::passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const ContinuityEntry& e) { return e.matched; });
}

ContinuityReport check_continuity(const Mesh& mesh, int r) {
  if (r < 0) fail(ErrorCode::invalid_argument, "polynomial degree must be >= 0");
  const int n = mesh.vertex_bound;
  std::vector<std::pair<IndexSet, std::vector<std::size_t>>> shared;
  for (auto& [face, owners] : face_owners(mesh))
    if (owners.size() > 1) shared.emplace_back(face, owners);
  std::sort(shared.begin(), shared.end(),
            [](const auto& a, const auto& b) { return by_dim_then_lex(a.first, b.first); });

  ContinuityReport report;
  for (const auto& [face, owners] : shared) {
    const auto points = lattice_points(n, r, face);
    const auto tuples = reduced_probe_tuples(n, face);
    // Global shape functions seen by this face: bubbles of each subface G.
    std::vector<std::pair<IndexSet, BasisElement>> functions;
    for (std::size_t k = 3; k <= face.size(); ++k)
      for (const auto& g : subsets(face, k))
        for (auto& e : bubble_basis(n, r, g)) functions.emplace_back(g, std::move(e));

    for (std::size_t other = 1; other < owners.size(); ++other) {
      ContinuityEntry entry{face, owners[0], owners[other], functions.size(), points.size() * tuples.size(), true, {}};
      for (const auto& [g, e] : functions) {
        if (!entry.matched) break;
        const auto local = to_form(e, g);
        const auto from_a = trace(extend(local, mesh.cells[entry.cell_a]), face);
        const auto from_b = trace(extend(local, mesh.cells[entry.cell_b]), face);
        for (const auto& p : points) {
          for (const auto& t : tuples) {
            const auto va = eval_poly(from_a, p, t[0], t[1], t[2], t[3]);
            const auto vb = eval_poly(from_b, p, t[0], t[1], t[2], t[3]);
            if (va != vb) {
              entry.matched = false;
              entry.mismatch = describe(e) + ": " + to_string(va) + " vs " + to_string(vb);
              break;
            }
          }
          if (!entry.matched) break;
        }
      }
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

}  // namespace biform
