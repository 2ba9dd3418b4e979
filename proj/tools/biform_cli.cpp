#include <biform/biform.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInternal = 3;

int report_error(biform_status status) {
  std::cerr << "biform: " << biform_status_name(status) << ": " << biform_last_error() << "\n";
  return status == BIFORM_ERR_INTERNAL ? kExitInternal : kExitInputError;
}

// Owns a string returned by the library.
struct CString {
  char* p = nullptr;
  ~CString() { biform_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmd_dims(int n, int r, bool as_json) {
  CString out;
  if (auto s = biform_dims_json(n, r, &out.p); s != BIFORM_OK) return report_error(s);
  if (as_json) {
    std::cout << out.str() << "\n";
    return kExitOk;
  }
  auto j = nlohmann::json::parse(out.str());
  std::cout << "n = " << n << ", r = " << r << "\n"
            << "dim sym (2,2)-forms      " << j["dim_sym"] << "\n"
            << "dim 4-forms              " << j["dim_lambda4"] << "\n"
            << "dim Bianchi kernel       " << j["dim_bianchi"] << "\n"
            << "dim degree-r space       " << j["dim_poly_bianchi"] << "\n"
            << "interior bubbles         " << j["bubble_count"] << "\n"
            << "per face dimension:\n";
  for (const auto& f : j["faces"])
    std::cout << "  m = " << f["m"] << ": " << f["faces"] << " faces x " << f["bubble_count"] << "\n";
  std::cout << "sum over faces           " << j["partition_sum"] << " ("
            << (j["partition_identity"].get<bool>() ? "matches" : "MISMATCH") << ")\n";
  return j["partition_identity"].get<bool>() ? kExitOk : kExitCheckFailed;
}

int cmd_basis(int n, int r, const std::vector<int>& face, bool has_face, bool as_json) {
  biform_basis* basis = nullptr;
  if (auto s = biform_basis_create(n, r, has_face ? face.data() : nullptr, face.size(), &basis); s != BIFORM_OK)
    return report_error(s);
  int code = kExitOk;
  if (as_json) {
    CString out;
    if (auto s = biform_basis_to_json(basis, &out.p); s != BIFORM_OK)
      code = report_error(s);
    else
      std::cout << out.str() << "\n";
  } else {
    for (size_t i = 0; i < biform_basis_size(basis); ++i) {
      CString label;
      if (auto s = biform_basis_describe(basis, i, &label.p); s != BIFORM_OK) {
        code = report_error(s);
        break;
      }
      std::cout << label.str() << "\n";
    }
    std::cerr << biform_basis_size(basis) << " elements\n";
  }
  biform_basis_destroy(basis);
  return code;
}

int cmd_certify(int n_max, int r_max, bool as_json, const std::string& fault) {
  unsigned flags = 0;
  if (fault == "gamma-sign") flags |= BIFORM_CERTIFY_FAULT_GAMMA_SIGN;
  biform_report* report = nullptr;
  if (auto s = biform_certify(n_max, r_max, flags, &report); s != BIFORM_OK) return report_error(s);
  CString json_out, text_out;
  auto s = biform_report_to_json(report, &json_out.p);
  if (s == BIFORM_OK && !as_json) s = biform_report_to_text(report, &text_out.p);
  const bool passed = biform_report_passed(report) != 0;
  biform_report_destroy(report);
  if (s != BIFORM_OK) return report_error(s);
  std::cout << (as_json ? json_out.str() + "\n" : text_out.str());
  if (!passed) {
    std::cerr << "biform: certification failed:";
    const auto j = nlohmann::json::parse(json_out.str());
    for (const auto& c : j["checks"])
      if (c["status"] == "fail") {
        std::cerr << " " << c["id"].get<std::string>() << "(n=" << c["n"];
        if (!c["r"].is_null()) std::cerr << ",r=" << c["r"];
        std::cerr << ")";
      }
    std::cerr << "\n";
  }
  return passed ? kExitOk : kExitCheckFailed;
}

int cmd_split(const std::string& path) {
  auto text = read_file(path);
  if (!text) {
    std::cerr << "biform: cannot read " << path << "\n";
    return kExitInputError;
  }
  CString out;
  if (auto s = biform_split_json(text->c_str(), &out.p); s != BIFORM_OK) return report_error(s);
  std::cout << out.str() << "\n";
  return kExitOk;
}

int cmd_mesh_dof(const std::string& path, int r, bool continuity, bool as_json) {
  auto text = read_file(path);
  if (!text) {
    std::cerr << "biform: cannot read " << path << "\n";
    return kExitInputError;
  }
  biform_mesh* mesh = nullptr;
  if (auto s = biform_mesh_from_json(text->c_str(), &mesh); s != BIFORM_OK) return report_error(s);
  CString out;
  int ok = 1;
  auto s = biform_mesh_dof_json(mesh, r, continuity ? 1 : 0, &out.p, &ok);
  biform_mesh_destroy(mesh);
  if (s != BIFORM_OK) return report_error(s);
  if (as_json) {
    std::cout << out.str() << "\n";
  } else {
    auto j = nlohmann::json::parse(out.str());
    for (const auto& f : j["faces"]) {
      std::string face;
      for (const auto& v : f["face"]) face += (face.empty() ? "" : ",") + v.dump();
      std::string cells;
      for (const auto& c : f["cells"]) cells += (cells.empty() ? "" : ",") + c.dump();
      std::cout << "face {" << face << "}  dim " << f["dim"] << "  dofs " << f["count"] << "  cells " << cells << "\n";
    }
    std::cout << "total " << j["total"] << "\n";
    if (j.contains("continuity")) {
      for (const auto& e : j["continuity"]["entries"]) {
        std::string face;
        for (const auto& v : e["face"]) face += (face.empty() ? "" : ",") + v.dump();
        std::cout << (e["matched"].get<bool>() ? "match    " : "MISMATCH ") << "face {" << face << "} cells "
                  << e["cells"][0] << "/" << e["cells"][1] << "  " << e["shape_functions"] << " functions, "
                  << e["probes"] << " probes";
        if (!e["matched"].get<bool>()) std::cout << "  " << e["mismatch"].get<std::string>();
        std::cout << "\n";
      }
      std::cout << "continuity " << (ok ? "pass" : "FAIL") << "\n";
    }
  }
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact bases for symmetric (2,2)-forms with the Bianchi identity"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(biform_version()));

  int n = 0, r = 0;
  bool as_json = false;

  auto* dims = app.add_subcommand("dims", "Dimension table of the degree-r space on T^n");
  dims->add_option("--n", n, "Simplex dimension")->required();
  dims->add_option("--r", r, "Polynomial degree")->required();
  dims->add_flag("--json", as_json, "Emit JSON");

  std::vector<int> face;
  auto* basis = app.add_subcommand("basis", "List the basis, or its traces on a face");
  basis->add_option("--n", n, "Simplex dimension")->required();
  basis->add_option("--r", r, "Polynomial degree")->required();
  auto* face_opt = basis->add_option("--face", face, "Face vertices, e.g. 0,1,2")->delimiter(',');
  basis->add_flag("--json", as_json, "Emit JSON");

  int n_max = 6, r_max = 3;
  std::string fault;
  auto* certify = app.add_subcommand("certify", "Run the certification suite");
  certify->add_option("--n-max", n_max, "Largest simplex dimension")->capture_default_str();
  certify->add_option("--r-max", r_max, "Largest polynomial degree")->capture_default_str();
  certify->add_flag("--json", as_json, "Emit JSON");
  certify->add_option("--inject-fault", fault, "Test mode: corrupt a generator")
      ->check(CLI::IsMember({"gamma-sign"}))
      ->group("Testing");

  std::string input;
  auto* split = app.add_subcommand("split", "Split a form into its Bianchi and 4-form parts");
  split->add_option("--input", input, "JSON double form")->required();

  std::string mesh_path;
  bool continuity = false;
  auto* mesh_dof = app.add_subcommand("mesh-dof", "Degrees of freedom on a simplicial mesh");
  mesh_dof->add_option("--mesh", mesh_path, "Mesh JSON")->required();
  mesh_dof->add_option("--r", r, "Polynomial degree")->required();
  mesh_dof->add_flag("--check-continuity", continuity, "Compare traces on shared faces");
  mesh_dof->add_flag("--json", as_json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*dims) return cmd_dims(n, r, as_json);
    if (*basis) return cmd_basis(n, r, face, face_opt->count() > 0, as_json);
    if (*certify) return cmd_certify(n_max, r_max, as_json, fault);
    if (*split) return cmd_split(input);
    if (*mesh_dof) return cmd_mesh_dof(mesh_path, r, continuity, as_json);
  } catch (const std::exception& e) {
    std::cerr << "biform: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInputError;
}
