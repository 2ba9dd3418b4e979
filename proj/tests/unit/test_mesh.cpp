#include <biform/combinatorics.hpp>
#include <biform/mesh.hpp>

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace biform;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(BIFORM_TEST_DATA) + "/" + name);
  if (!in) throw std::runtime_error("cannot open " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Mesh load(const std::string& name) { return parse_mesh_json(slurp(name)); }

ErrorCode code_of(const std::string& name) {
  try {
    load(name);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << name << " accepted";
  return ErrorCode::invalid_argument;
}

}  // namespace

TEST(Mesh, Construction) {
  const auto m = make_mesh({{3, 1, 2, 0}, {1, 2, 3, 4}});
  EXPECT_EQ(m.cells[0], IndexSet({0, 1, 2, 3}));
  EXPECT_EQ(m.cell_dim, 3);
  EXPECT_EQ(m.vertex_bound, 4);
  EXPECT_THROW(make_mesh({}), Error);
  EXPECT_THROW(make_mesh({{0, 1}}), Error);
  EXPECT_THROW(make_mesh({{0, 1, 1, 2}}), Error);
  EXPECT_THROW(make_mesh({{0, 1, 2}}, {"a", "b"}), Error);
}

TEST(Mesh, DofCounts) {
  EXPECT_EQ(dof_table(load("two_tets.json"), 0).total, 11);
  EXPECT_EQ(dof_table(load("single_tet.json"), 1).total, 24);
  EXPECT_EQ(dof_table(load("single_triangle.json"), 0).total, 1);
  EXPECT_EQ(dof_table(load("triangle_fan.json"), 0).total, 4);
  EXPECT_EQ(dof_table(load("three_tets_edge.json"), 0).total, 16);
  EXPECT_EQ(dof_table(load("two_pentachora.json"), 0).total, 34);
}

TEST(Mesh, DofRecordsForTwoTets) {
  const auto table = dof_table(load("two_tets.json"), 0);
  std::int64_t triangles = 0, tets = 0;
  for (const auto& rec : table.records) {
    if (rec.dim == 2) triangles += rec.count;
    if (rec.dim == 3) tets += rec.count;
    if (rec.face == IndexSet({1, 2, 3})) EXPECT_EQ(rec.owning_cells, (std::vector<std::size_t>{0, 1}));
  }
  EXPECT_EQ(triangles, 7);
  EXPECT_EQ(tets, 4);
  for (std::size_t i = 1; i < table.records.size(); ++i)
    EXPECT_LE(table.records[i - 1].dim, table.records[i].dim);
}

TEST(Mesh, SingleCellTotalIsFullSpaceDimension) {
  for (int n = 2; n <= 4; ++n) {
    std::vector<int> cell;
    for (int v = 0; v <= n; ++v) cell.push_back(v);
    const auto mesh = make_mesh({cell});
    for (int r = 0; r <= 3; ++r) EXPECT_EQ(dof_table(mesh, r).total, dim_poly_bianchi(n, r)) << n << "," << r;
  }
}

TEST(Mesh, CountsAreLabelIndependent) {
  // Relabelling vertices leaves the table unchanged.
  const auto a = dof_table(make_mesh({{0, 1, 2, 3}, {1, 2, 3, 4}}), 1);
  const auto b = dof_table(make_mesh({{4, 3, 2, 0}, {3, 2, 0, 1}}), 1);
  EXPECT_EQ(a.total, b.total);
}

TEST(Continuity, CorpusMeshes) {
  for (const char* name : {"two_tets.json", "triangle_fan.json", "three_tets_edge.json"})
    for (int r = 0; r <= 1; ++r) {
      const auto report = check_continuity(load(name), r);
      EXPECT_TRUE(report.passed()) << name << " r=" << r;
      // Triangles in the fan share only edges, which carry no dofs.
      EXPECT_EQ(report.entries.empty(), std::string(name) == "triangle_fan.json") << name;
      for (const auto& e : report.entries) {
        EXPECT_GT(e.probes, 0u);
        EXPECT_TRUE(e.mismatch.empty()) << e.mismatch;
      }
    }
  EXPECT_TRUE(check_continuity(load("two_tets.json"), 2).passed());
}

TEST(Continuity, IsolatedCellHasNothingToMatch) {
  EXPECT_TRUE(check_continuity(load("single_tet.json"), 1).entries.empty());
}

TEST(Mesh, RejectsBadInput) {
  EXPECT_EQ(code_of("nonconforming_triple_facet.json"), ErrorCode::nonconforming_mesh);
  EXPECT_EQ(code_of("duplicate_cells.json"), ErrorCode::nonconforming_mesh);
  EXPECT_EQ(code_of("mixed_dimension.json"), ErrorCode::invalid_argument);
  EXPECT_EQ(code_of("malformed.json"), ErrorCode::parse_error);
  EXPECT_THROW(parse_mesh_json(R"({"cells":[[0,1,2]],"schema":"other/1"})"), Error);
  EXPECT_THROW(parse_mesh_json(R"({"cells":[[0,1,-2]]})"), Error);
}

TEST(Mesh, NonconformingMessageNamesCells) {
  try {
    load("duplicate_cells.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("cell"), std::string::npos) << e.what();
  }
}
