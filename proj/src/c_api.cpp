#include "omclab/omclab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "errors.hpp"
#include "reports.hpp"

struct omc_circuits {
  omc::CircuitSet set;
};

struct omc_polytope {
  omc::VPolytope p;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

omc_status fail(omc_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <typename F>
omc_status guarded(F&& f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const omc::Error& e) {
    switch (e.kind()) {
      case omc::ErrorKind::Parse: return fail(OMC_ERR_PARSE, e.what());
      case omc::ErrorKind::Guard: return fail(OMC_ERR_GUARD, e.what());
      case omc::ErrorKind::Mismatch: return fail(OMC_ERR_MISMATCH, e.what());
      case omc::ErrorKind::Domain: return fail(OMC_ERR_DOMAIN, e.what());
      case omc::ErrorKind::Invalid: return fail(OMC_ERR_INVALID, e.what());
    }
    return fail(OMC_ERR_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(OMC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(OMC_ERR_INTERNAL, e.what());
  }
}

omc::InputKind to_kind(omc_input_kind k) {
  switch (k) {
    case OMC_INPUT_MATRIX: return omc::InputKind::Matrix;
    case OMC_INPUT_DIGRAPH: return omc::InputKind::Digraph;
    case OMC_INPUT_POLYTOPE: return omc::InputKind::Polytope;
    case OMC_INPUT_AUTO: return omc::InputKind::Auto;
  }
  throw omc::Error(omc::ErrorKind::Invalid, "unknown input kind");
}

void require(bool ok, const char* what) {
  if (!ok) throw omc::Error(omc::ErrorKind::Invalid, what);
}

omc_status emit(const omc::Report& r, char** out) {
  *out = dup_string(r.json.dump(2));
  if (r.passed) return OMC_OK;
  return fail(OMC_ERR_MISMATCH, "one or more checks failed");
}

}  // namespace

extern "C" {

const char* omc_version(void) { return "1.0.0"; }

const char* omc_last_error(void) { return g_last_error.c_str(); }

const char* omc_status_name(omc_status status) {
  switch (status) {
    case OMC_OK: return "ok";
    case OMC_ERR_INVALID: return "invalid argument";
    case OMC_ERR_PARSE: return "parse error";
    case OMC_ERR_GUARD: return "guard violation";
    case OMC_ERR_MISMATCH: return "check mismatch";
    case OMC_ERR_DOMAIN: return "domain error";
    case OMC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void omc_string_free(char* s) { std::free(s); }

omc_status omc_circuits_from_text(const char* text, omc_input_kind kind, int dual, omc_circuits** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = nullptr;
    const omc::Input in = omc::parse_input(text, to_kind(kind));
    *out = new omc_circuits{omc::circuits_of(in, dual != 0)};
    return OMC_OK;
  });
}

void omc_circuits_free(omc_circuits* c) { delete c; }

size_t omc_circuits_count(const omc_circuits* c) { return c ? c->set.size() : 0; }

size_t omc_circuits_ground_size(const omc_circuits* c) { return c ? c->set.ground_size() : 0; }

omc_status omc_circuits_get(const omc_circuits* c, size_t i, char** out) {
  return guarded([&] {
    require(c && out, "null argument");
    if (i >= c->set.size()) throw omc::Error(omc::ErrorKind::Invalid, "circuit index out of range");
    *out = dup_string(c->set.circuits()[i].sign_string());
    return OMC_OK;
  });
}

omc_status omc_circuits_to_json(const omc_circuits* c, char** out) {
  return guarded([&] {
    require(c && out, "null argument");
    *out = dup_string(omc::to_json(c->set).dump(2));
    return OMC_OK;
  });
}

omc_status omc_circuits_validate(const omc_circuits* c, int* passed, char** report_json) {
  return guarded([&] {
    require(c && passed, "null argument");
    const omc::AxiomReport r = omc::validate_circuit_axioms(c->set);
    *passed = r.passed ? 1 : 0;
    if (report_json) *report_json = dup_string(omc::to_json(r).dump(2));
    return OMC_OK;
  });
}

omc_status omc_polytope_from_circuits(const omc_circuits* c, omc_polytope** out) {
  return guarded([&] {
    require(c && out, "null argument");
    *out = new omc_polytope{omc::omc_polytope(c->set)};
    return OMC_OK;
  });
}

omc_status omc_polytope_from_json(const char* text, omc_polytope** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new omc_polytope{omc::polytope_from_json(omc::parse_json(text))};
    return OMC_OK;
  });
}

void omc_polytope_free(omc_polytope* p) { delete p; }

size_t omc_polytope_ambient_dim(const omc_polytope* p) { return p ? p->p.ambient_dim() : 0; }

size_t omc_polytope_vertex_count(const omc_polytope* p) { return p ? p->p.vertex_count() : 0; }

omc_status omc_polytope_dimension(const omc_polytope* p, size_t* out) {
  return guarded([&] {
    require(p && out, "null argument");
    *out = p->p.dimension();
    return OMC_OK;
  });
}

omc_status omc_polytope_to_json(const omc_polytope* p, char** out) {
  return guarded([&] {
    require(p && out, "null argument");
    *out = dup_string(omc::to_json(p->p).dump(2));
    return OMC_OK;
  });
}

omc_status omc_polytope_facets_json(const omc_polytope* p, char** out) {
  return guarded([&] {
    require(p && out, "null argument");
    *out = dup_string(omc::to_json(omc::facets(p->p)).dump(2));
    return OMC_OK;
  });
}

omc_status omc_polytope_faces_json(const omc_polytope* p, size_t max_dim, char** out) {
  return guarded([&] {
    require(p && out, "null argument");
    omc::Json faces = omc::Json::array();
    for (const auto& f : omc::face_lattice(p->p, max_dim)) {
      omc::Json j;
      j["dim"] = f.dim;
      j["vertex_indices"] = omc::to_json(f.vertex_indices);
      faces.push_back(j);
    }
    *out = dup_string(faces.dump(2));
    return OMC_OK;
  });
}

omc_status omc_polytope_lattice_count(const omc_polytope* p, unsigned t, char** out) {
  return guarded([&] {
    require(p && out, "null argument");
    *out = dup_string(omc::lattice_count(p->p, t).get_str());
    return OMC_OK;
  });
}

omc_status omc_polytope_ehrhart_json(const omc_polytope* p, char** out) {
  return guarded([&] {
    require(p && out, "null argument");
    const omc::EhrhartData e = omc::ehrhart(p->p);
    omc::Json j, counts = omc::Json::array();
    for (const auto& c : e.counts) counts.push_back(c.get_str());
    j["counts"] = counts;
    j["ehrhart"] = omc::to_json(e.polynomial);
    j["h_star"] = omc::to_json(e.h_star);
    *out = dup_string(j.dump(2));
    return OMC_OK;
  });
}

omc_status omc_polytope_certify(const omc_polytope* p, int* passed) {
  return guarded([&] {
    require(p && passed, "null argument");
    *passed = omc::certify_vertices(p->p).passed ? 1 : 0;
    return OMC_OK;
  });
}

omc_status omc_report_circuits(const char* text, omc_input_kind kind, int dual, int verify, char** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = nullptr;
    return emit(omc::circuits_report(omc::parse_input(text, to_kind(kind)), dual != 0, verify != 0), out);
  });
}

omc_status omc_report_polytope(const char* text, omc_input_kind kind, int dual, const char* what, unsigned t,
                               int verify, size_t max_face_dim, char** out) {
  return guarded([&] {
    require(text && what && out, "null argument");
    *out = nullptr;
    return emit(omc::polytope_report(omc::parse_input(text, to_kind(kind)), dual != 0, what, t, verify != 0,
                                     max_face_dim),
                out);
  });
}

omc_status omc_report_family(unsigned n, const char* what, int verify, size_t max_face_dim, char** out) {
  return guarded([&] {
    require(what && out, "null argument");
    *out = nullptr;
    return emit(omc::family_report(n, what, verify != 0, max_face_dim), out);
  });
}

omc_status omc_report_equivariant(unsigned n, const char* sigma, int verify, char** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = nullptr;
    std::optional<std::string> s;
    if (sigma) s = sigma;
    return emit(omc::equivariant_report(n, s, verify != 0), out);
  });
}

omc_status omc_report_reproduce(const char* fixture_dir, char** out) {
  return guarded([&] {
    require(fixture_dir && out, "null argument");
    *out = nullptr;
    return emit(omc::reproduce_report(fixture_dir), out);
  });
}

}  // extern "C"
