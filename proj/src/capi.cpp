#include <biform/biform.h>
#include <biform/serialize.hpp>

#include <cstdlib>
#include <cstring>
#include <iomanip>
#include <new>
#include <sstream>

struct biform_basis {
  int n;
  int r;
  std::optional<biform::IndexSet> face;
  std::vector<biform::BasisElement> elements;
};

struct biform_form {
  biform::DoubleForm22 omega;
};

struct biform_mesh {
  biform::Mesh mesh;
};

struct biform_report {
  biform::Report report;
};

namespace {

thread_local std::string last_error;

biform_status status_of(biform::ErrorCode code) {
  switch (code) {
    case biform::ErrorCode::invalid_argument:
      return BIFORM_ERR_INVALID_ARGUMENT;
    case biform::ErrorCode::parse_error:
      return BIFORM_ERR_PARSE;
    case biform::ErrorCode::bounds_exceeded:
      return BIFORM_ERR_BOUNDS;
    case biform::ErrorCode::nonconforming_mesh:
      return BIFORM_ERR_NONCONFORMING;
  }
  return BIFORM_ERR_INTERNAL;
}

template <class F>
biform_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return BIFORM_OK;
  } catch (const biform::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return BIFORM_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return BIFORM_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return BIFORM_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) biform::fail(biform::ErrorCode::invalid_argument, std::string(what) + " is null");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

nlohmann::json parse_json(const char* text, const char* what) {
  require(text, what);
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    biform::fail(biform::ErrorCode::parse_error, std::string(what) + " is not valid JSON: " + e.what());
  }
}

std::string report_text(const biform::Report& report) {
  std::ostringstream out;
  std::size_t failed = 0, skipped = 0;
  for (const auto& c : report.checks) {
    if (c.status == biform::CheckStatus::fail) ++failed;
    if (c.status == biform::CheckStatus::skip) ++skipped;
    std::string label = c.status == biform::CheckStatus::pass   ? "PASS"
                        : c.status == biform::CheckStatus::fail ? "FAIL"
                                                                : "SKIP";
    std::string where = "n=" + std::to_string(c.n) + (c.r >= 0 ? " r=" + std::to_string(c.r) : "");
    out << label << "  " << std::left << std::setw(28) << c.id << std::setw(9) << where << c.detail << "\n";
    for (const auto& p : c.payload) out << "      " << p << "\n";
  }
  out << report.checks.size() << " checks, " << failed << " failed, " << skipped << " skipped\n";
  return out.str();
}

}  // namespace

extern "C" {

const char* biform_version(void) { return "1.0.0"; }

const char* biform_last_error(void) { return last_error.c_str(); }

const char* biform_status_name(biform_status status) {
  switch (status) {
    case BIFORM_OK:
      return "ok";
    case BIFORM_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case BIFORM_ERR_PARSE:
      return "parse error";
    case BIFORM_ERR_BOUNDS:
      return "bounds exceeded";
    case BIFORM_ERR_NONCONFORMING:
      return "nonconforming mesh";
    case BIFORM_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void biform_string_free(char* s) { std::free(s); }

biform_status biform_dims_json(int n, int r, char** out_json) {
  return guarded([&] {
    require(out_json, "out_json");
    if (n < 2 || r < 0) biform::fail(biform::ErrorCode::invalid_argument, "dims needs n >= 2 and r >= 0");
    if (n > 8 || r > 8) biform::fail(biform::ErrorCode::bounds_exceeded, "dims supports n <= 8 and r <= 8");
    *out_json = dup_string(biform::dims_to_json(n, r).dump(2));
  });
}

biform_status biform_basis_create(int n, int r, const int* face, size_t face_len, biform_basis** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    if (n < 2 || r < 0) biform::fail(biform::ErrorCode::invalid_argument, "basis needs n >= 2 and r >= 0");
    if (n > 8 || r > 8) biform::fail(biform::ErrorCode::bounds_exceeded, "basis supports n <= 8 and r <= 8");
    auto handle = std::make_unique<biform_basis>();
    handle->n = n;
    handle->r = r;
    if (face) {
      std::vector<int> ids(face, face + face_len);
      for (int v : ids)
        if (v < 0 || v > n)
          biform::fail(biform::ErrorCode::invalid_argument,
                       "face vertex " + std::to_string(v) + " outside {0.." + std::to_string(n) + "}");
      try {
        handle->face = biform::IndexSet(ids);
      } catch (const biform::Error&) {
        biform::fail(biform::ErrorCode::invalid_argument, "face vertices must be distinct");
      }
      if (handle->face->empty()) biform::fail(biform::ErrorCode::invalid_argument, "face is empty");
    }
    for (auto& e : biform::poly_basis(n, r))
      if (!handle->face || biform::index_set(e).subset_of(*handle->face)) handle->elements.push_back(std::move(e));
    *out = handle.release();
  });
}

size_t biform_basis_size(const biform_basis* basis) { return basis ? basis->elements.size() : 0; }

biform_status biform_basis_describe(const biform_basis* basis, size_t i, char** out) {
  return guarded([&] {
    require(basis, "basis");
    require(out, "out");
    if (i >= basis->elements.size()) biform::fail(biform::ErrorCode::invalid_argument, "element index out of range");
    *out = dup_string(biform::describe(basis->elements[i]));
  });
}

biform_status biform_basis_to_json(const biform_basis* basis, char** out_json) {
  return guarded([&] {
    require(basis, "basis");
    require(out_json, "out_json");
    *out_json = dup_string(biform::basis_to_json(basis->n, basis->r, basis->face).dump(2));
  });
}

void biform_basis_destroy(biform_basis* basis) { delete basis; }

biform_status biform_form_from_json(const char* json, biform_form** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    auto j = parse_json(json, "form");
    *out = new biform_form{biform::double_form_from_json(j)};
  });
}

biform_status biform_form_to_json(const biform_form* form, char** out_json) {
  return guarded([&] {
    require(form, "form");
    require(out_json, "out_json");
    *out_json = dup_string(biform::to_json(form->omega).dump(2));
  });
}

biform_status biform_form_is_bianchi(const biform_form* form, int* out) {
  return guarded([&] {
    require(form, "form");
    require(out, "out");
    *out = biform::is_bianchi(form->omega) ? 1 : 0;
  });
}

biform_status biform_form_split(const biform_form* form, biform_form** kernel_part, biform_form** lambda4_part) {
  return guarded([&] {
    require(form, "form");
    require(kernel_part, "kernel_part");
    require(lambda4_part, "lambda4_part");
    auto s = biform::split(form->omega);
    auto k = std::make_unique<biform_form>(biform_form{std::move(s.kernel_part)});
    auto l = std::make_unique<biform_form>(biform_form{std::move(s.lambda4_part)});
    *kernel_part = k.release();
    *lambda4_part = l.release();
  });
}

void biform_form_destroy(biform_form* form) { delete form; }

biform_status biform_split_json(const char* json, char** out_json) {
  return guarded([&] {
    require(out_json, "out_json");
    auto omega = biform::double_form_from_json(parse_json(json, "form"));
    auto s = biform::split(omega);
    if (!biform::wedge_map(s.kernel_part).is_zero())
      throw std::logic_error("kernel part of the split has nonzero wedge");
    auto j = biform::to_json(s);
    j["input"] = biform::to_json(omega);
    j["input"].erase("schema");
    *out_json = dup_string(j.dump(2));
  });
}

biform_status biform_mesh_from_json(const char* json, biform_mesh** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    require(json, "mesh");
    *out = new biform_mesh{biform::parse_mesh_json(json)};
  });
}

size_t biform_mesh_cell_count(const biform_mesh* mesh) { return mesh ? mesh->mesh.cells.size() : 0; }

biform_status biform_mesh_dof_json(const biform_mesh* mesh, int r, int check_continuity, char** out_json,
                                   int* continuity_ok) {
  return guarded([&] {
    require(mesh, "mesh");
    require(out_json, "out_json");
    if (r > 8) biform::fail(biform::ErrorCode::bounds_exceeded, "mesh-dof supports r <= 8");
    auto j = biform::to_json(biform::dof_table(mesh->mesh, r));
    if (check_continuity) {
      auto report = biform::check_continuity(mesh->mesh, r);
      j["continuity"] = biform::to_json(report);
      if (continuity_ok) *continuity_ok = report.passed() ? 1 : 0;
    } else if (continuity_ok) {
      *continuity_ok = 1;
    }
    *out_json = dup_string(j.dump(2));
  });
}

void biform_mesh_destroy(biform_mesh* mesh) { delete mesh; }

biform_status biform_certify(int n_max, int r_max, unsigned flags, biform_report** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    if (flags & ~BIFORM_CERTIFY_FAULT_GAMMA_SIGN)
      throw biform::Error(biform::ErrorCode::invalid_argument, "unknown certify flags");
    biform::CertifyOptions options;
    options.n_max = n_max;
    options.r_max = r_max;
    if (flags & BIFORM_CERTIFY_FAULT_GAMMA_SIGN) options.fault = biform::Fault::gamma_sign_flip;
    *out = new biform_report{biform::certify_suite(options)};
  });
}

int biform_report_passed(const biform_report* report) { return report && report->report.passed() ? 1 : 0; }

size_t biform_report_size(const biform_report* report) { return report ? report->report.checks.size() : 0; }

biform_status biform_report_to_json(const biform_report* report, char** out_json) {
  return guarded([&] {
    require(report, "report");
    require(out_json, "out_json");
    *out_json = dup_string(biform::to_json(report->report).dump(2));
  });
}

biform_status biform_report_to_text(const biform_report* report, char** out_text) {
  return guarded([&] {
    require(report, "report");
    require(out_text, "out_text");
    *out_text = dup_string(report_text(report->report));
  });
}

void biform_report_destroy(biform_report* report) { delete report; }

}  // extern "C"
