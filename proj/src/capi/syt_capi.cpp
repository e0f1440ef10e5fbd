#include "syt/syt.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "core/descriptor.hpp"
#include "core/error.hpp"
#include "core/exact_count.hpp"
#include "core/factorize.hpp"
#include "core/families.hpp"
#include "core/scan.hpp"
#include "core/verify.hpp"

struct syt_region {
  syt::ShapeDescriptor shape;
  syt::CellRegion region;
};

struct syt_factorization {
  syt::Factorization value;
};

struct syt_tableaux {
  std::vector<std::vector<int>> labels;
};

struct syt_report {
  syt::VerifyReport value;
};

struct syt_table_row {
  std::string family;
  std::string params;
  int size;
  std::string count;
  std::string largest_prime;
  bool smooth;
};

struct syt_table {
  std::vector<syt_table_row> rows;
};

namespace {

thread_local std::string last_error;

syt_status to_status(syt::Errc code) {
  return static_cast<syt_status>(static_cast<int>(code) + 1);
}

template <class F>
syt_status guarded(F&& body) {
  try {
    body();
    return SYT_OK;
  } catch (const syt::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SYT_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SYT_ERR_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) syt::fail(syt::Errc::invalid_argument, what);
}

syt::BigInt parse_decimal(const char* text) {
  require(text != nullptr, "null number");
  syt::BigInt v;
  if (v.set_str(text, 10) != 0 || v <= 0) syt::fail(syt::Errc::invalid_argument, std::string("not a positive integer: ") + text);
  return v;
}

std::optional<int> opt(int v) { return v < 0 ? std::nullopt : std::optional<int>(v); }

}  // namespace

extern "C" {

const char* syt_version(void) { return "1.0.0"; }

const char* syt_status_name(syt_status status) {
  if (status == SYT_OK) return "OK";
  if (status == SYT_ERR_INTERNAL) return "Internal";
  if (status < SYT_OK || status > SYT_ERR_INTERNAL) return "Unknown";
  return syt::errc_name(static_cast<syt::Errc>(static_cast<int>(status) - 1));
}

const char* syt_last_error(void) { return last_error.c_str(); }

void syt_string_free(char* s) { std::free(s); }

syt_status syt_region_parse(const char* spec, syt_region** out) {
  return guarded([&] {
    require(spec && out, "null argument");
    auto shape = syt::parse_shape(spec);
    auto region = syt::build_region(shape);
    *out = new syt_region{std::move(shape), std::move(region)};
  });
}

void syt_region_destroy(syt_region* region) { delete region; }

int syt_region_size(const syt_region* region) { return region ? region->region.size() : 0; }

int syt_region_rows(const syt_region* region) { return region ? region->region.num_rows() : 0; }

syt_status syt_region_row(const syt_region* region, int r, int* start, int* end) {
  return guarded([&] {
    require(region && start && end, "null argument");
    require(r >= 1 && r <= region->region.num_rows(), "row out of range");
    *start = region->region.row(r).start;
    *end = region->region.row(r).end;
  });
}

syt_status syt_region_spec(const syt_region* region, char** out) {
  return guarded([&] {
    require(region && out, "null argument");
    *out = dup(region->shape.to_string());
  });
}

syt_status syt_count(const syt_region* region, syt_method method, char** value, char** method_used,
                     int* conjecture) {
  return guarded([&] {
    require(region && value, "null argument");
    syt::CountMethod m = syt::CountMethod::automatic;
    if (method == SYT_METHOD_FORMULA)
      m = syt::CountMethod::formula;
    else if (method == SYT_METHOD_ORACLE)
      m = syt::CountMethod::oracle;
    else
      require(method == SYT_METHOD_AUTO, "unknown method");
    const syt::CountResult r = syt::count_shape(region->shape, m);
    char* v = dup(syt::decimal(r.value));
    if (method_used) {
      try {
        *method_used = dup(r.method);
      } catch (...) {
        std::free(v);
        throw;
      }
    }
    *value = v;
    if (conjecture) *conjecture = r.conjecture ? 1 : 0;
  });
}

syt_status syt_factorize(const char* decimal, syt_factorization** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = new syt_factorization{syt::factorize(parse_decimal(decimal))};
  });
}

void syt_factorization_destroy(syt_factorization* f) { delete f; }

size_t syt_factorization_terms(const syt_factorization* f) { return f ? f->value.terms.size() : 0; }

syt_status syt_factorization_term(const syt_factorization* f, size_t index, char** prime, unsigned* exponent) {
  return guarded([&] {
    require(f && prime && exponent, "null argument");
    require(index < f->value.terms.size(), "term index out of range");
    *prime = dup(syt::decimal(f->value.terms[index].prime));
    *exponent = f->value.terms[index].exponent;
  });
}

syt_status syt_factorization_largest_prime(const syt_factorization* f, char** out) {
  return guarded([&] {
    require(f && out, "null argument");
    *out = dup(syt::decimal(f->value.largest_prime));
  });
}

int syt_factorization_complete(const syt_factorization* f) { return f && f->value.complete ? 1 : 0; }

int syt_factorization_probabilistic(const syt_factorization* f) { return f && f->value.probabilistic ? 1 : 0; }

syt_status syt_factorization_string(const syt_factorization* f, char** out) {
  return guarded([&] {
    require(f && out, "null argument");
    *out = dup(f->value.to_string());
  });
}

syt_status syt_is_smooth(const char* decimal, uint64_t bound, int* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    require(bound > 0, "bound must be positive");
    *out = syt::is_smooth(parse_decimal(decimal), bound) ? 1 : 0;
  });
}

syt_status syt_enumerate(const syt_region* region, size_t limit, syt_tableaux** out) {
  return guarded([&] {
    require(region && out, "null argument");
    auto result = std::make_unique<syt_tableaux>();
    syt::for_each_syt(region->region, [&](const syt::Tableau& t) {
      result->labels.push_back(t.labels());
      return limit == 0 || result->labels.size() < limit;
    });
    *out = result.release();
  });
}

void syt_tableaux_destroy(syt_tableaux* t) { delete t; }

size_t syt_tableaux_count(const syt_tableaux* t) { return t ? t->labels.size() : 0; }

const int* syt_tableaux_labels(const syt_tableaux* t, size_t index) {
  if (!t || index >= t->labels.size()) return nullptr;
  return t->labels[index].data();
}

void syt_verify_args_init(syt_verify_args* args) {
  if (!args) return;
  args->mu = nullptr;
  args->mu_len = 0;
  args->m = args->n = args->k = args->t = args->t1 = args->t2 = args->big_n = -1;
}

size_t syt_identity_count(void) { return syt::identity_names().size(); }

const char* syt_identity_name(size_t index) {
  const auto& names = syt::identity_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

syt_status syt_verify(const char* identity, const syt_verify_args* args, syt_report** out) {
  return guarded([&] {
    require(identity && args && out, "null argument");
    syt::VerifyArgs a;
    if (args->mu) a.mu = std::vector<int>(args->mu, args->mu + args->mu_len);
    a.m = opt(args->m);
    a.n = opt(args->n);
    a.k = opt(args->k);
    a.t = opt(args->t);
    a.t1 = opt(args->t1);
    a.t2 = opt(args->t2);
    a.big_n = opt(args->big_n);
    *out = new syt_report{syt::verify_identity(identity, a)};
  });
}

void syt_report_destroy(syt_report* r) { delete r; }
const char* syt_report_identity(const syt_report* r) { return r ? r->value.identity.c_str() : ""; }
const char* syt_report_title(const syt_report* r) { return r ? r->value.title.c_str() : ""; }
const char* syt_report_lhs(const syt_report* r) { return r ? r->value.lhs.c_str() : ""; }
const char* syt_report_rhs(const syt_report* r) { return r ? r->value.rhs.c_str() : ""; }
int syt_report_passed(const syt_report* r) { return r && r->value.passed ? 1 : 0; }
int syt_report_conjecture(const syt_report* r) { return r && r->value.conjecture ? 1 : 0; }
size_t syt_report_detail_count(const syt_report* r) { return r ? r->value.details.size() : 0; }
const char* syt_report_detail(const syt_report* r, size_t index) {
  if (!r || index >= r->value.details.size()) return nullptr;
  return r->value.details[index].c_str();
}

void syt_scan_request_init(syt_scan_request* req) {
  if (!req) return;
  std::memset(req, 0, sizeof *req);
}

size_t syt_scan_family_count(void) { return syt::scan_families().size(); }

const char* syt_scan_family_name(size_t index) {
  const auto& names = syt::scan_families();
  return index < names.size() ? names[index].c_str() : nullptr;
}

syt_status syt_scan(const syt_scan_request* req, syt_table** out) {
  return guarded([&] {
    require(req && req->family && out, "null argument");
    syt::ScanRequest r;
    r.family = req->family;
    if (req->m_range) r.m = syt::parse_range(req->m_range);
    if (req->n_range) r.n = syt::parse_range(req->n_range);
    if (req->k_range) r.k = syt::parse_range(req->k_range);
    if (req->kappa) r.kappa = syt::Partition(std::vector<int>(req->kappa, req->kappa + req->kappa_len));
    if (req->oracle_max_n > 0) r.oracle_max_n = req->oracle_max_n;
    r.threads = req->threads;
    auto table = std::make_unique<syt_table>();
    for (const syt::ScanRow& row : syt::run_scan(r)) {
      table->rows.push_back({row.family, row.params, row.size, syt::decimal(row.count),
                             syt::decimal(row.largest_prime), row.n_smooth});
    }
    *out = table.release();
  });
}

void syt_table_destroy(syt_table* t) { delete t; }
size_t syt_table_rows(const syt_table* t) { return t ? t->rows.size() : 0; }
const char* syt_table_family(const syt_table* t, size_t row) {
  return t && row < t->rows.size() ? t->rows[row].family.c_str() : nullptr;
}
const char* syt_table_params(const syt_table* t, size_t row) {
  return t && row < t->rows.size() ? t->rows[row].params.c_str() : nullptr;
}
int syt_table_size(const syt_table* t, size_t row) { return t && row < t->rows.size() ? t->rows[row].size : -1; }
const char* syt_table_count(const syt_table* t, size_t row) {
  return t && row < t->rows.size() ? t->rows[row].count.c_str() : nullptr;
}
const char* syt_table_largest_prime(const syt_table* t, size_t row) {
  return t && row < t->rows.size() ? t->rows[row].largest_prime.c_str() : nullptr;
}
int syt_table_smooth(const syt_table* t, size_t row) { return t && row < t->rows.size() && t->rows[row].smooth ? 1 : 0; }

}  // extern "C"
