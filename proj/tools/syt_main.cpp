// Command-line front end over the C API in libsyt.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "syt/syt.h"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Thrown for library failures; reported as usage errors.
struct ApiError {
  syt_status status;
  std::string message;
};

void check(syt_status s) {
  if (s != SYT_OK) throw ApiError{s, syt_last_error()};
}

struct Str {
  char* p = nullptr;
  ~Str() { syt_string_free(p); }
  std::string get() const { return p ? p : ""; }
};

template <class T, void (*Destroy)(T*)>
struct Handle {
  T* p = nullptr;
  ~Handle() { Destroy(p); }
};

using Region = Handle<syt_region, syt_region_destroy>;
using Factors = Handle<syt_factorization, syt_factorization_destroy>;
using Tableaux = Handle<syt_tableaux, syt_tableaux_destroy>;
using Report = Handle<syt_report, syt_report_destroy>;
using Table = Handle<syt_table, syt_table_destroy>;

std::vector<int> parse_ints(const std::string& text, const char* what) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != item.size() || v < 0) throw CLI::ValidationError(what, "expected comma separated nonnegative integers");
    out.push_back(v);
  }
  return out;
}

void print_count(const std::string& value) {
  std::cout << value << "\n";
  if (value.size() > 80) std::cout << "(" << value.size() << " digits)\n";
}

struct CountOut {
  std::string value;
  std::string method;
  bool conjecture = false;
};

CountOut count(const syt_region* r, syt_method method) {
  Str value, used;
  int conj = 0;
  check(syt_count(r, method, &value.p, &used.p, &conj));
  return {value.get(), used.get(), conj != 0};
}

syt_method method_from(const std::string& m) {
  if (m == "formula") return SYT_METHOD_FORMULA;
  if (m == "oracle") return SYT_METHOD_ORACLE;
  return SYT_METHOD_AUTO;
}

int cmd_count(const std::string& spec, const std::string& method, bool verify) {
  Region r;
  check(syt_region_parse(spec.c_str(), &r.p));
  if (!verify) {
    const CountOut c = count(r.p, method_from(method));
    print_count(c.value);
    if (c.conjecture) std::cout << "CONJECTURE: " << c.method << " is an unproven formula\n";
    return 0;
  }
  const CountOut f = count(r.p, SYT_METHOD_FORMULA);
  const CountOut o = count(r.p, SYT_METHOD_ORACLE);
  std::cout << "formula " << f.value << " (" << f.method.substr(f.method.find(':') + 1) << ")"
            << (f.conjecture ? " CONJECTURE" : "") << "\n";
  std::cout << "oracle " << o.value << "\n";
  const bool ok = f.value == o.value;
  std::cout << (ok ? "OK" : "MISMATCH") << "\n";
  return ok ? 0 : kExitFail;
}

int cmd_factor(const std::string& spec, const std::string& method) {
  Region r;
  check(syt_region_parse(spec.c_str(), &r.p));
  const int size = syt_region_size(r.p);
  const CountOut c = count(r.p, method_from(method));
  Factors f;
  check(syt_factorize(c.value.c_str(), &f.p));
  Str text, largest;
  check(syt_factorization_string(f.p, &text.p));
  check(syt_factorization_largest_prime(f.p, &largest.p));
  int smooth = 0;
  check(syt_is_smooth(c.value.c_str(), static_cast<uint64_t>(std::max(size, 1)), &smooth));
  std::cout << "shape " << spec << "\nN " << size << "\ncount " << c.value << "\n";
  if (c.value.size() > 80) std::cout << "digits " << c.value.size() << "\n";
  if (c.conjecture) std::cout << "CONJECTURE: count from an unproven formula\n";
  std::cout << "factorization " << (syt_factorization_terms(f.p) == 0 ? std::string("(empty)") : text.get()) << "\n";
  std::cout << "largest prime " << largest.get() << (syt_factorization_complete(f.p) ? "" : " (factorization incomplete)")
            << "\n";
  std::cout << (smooth ? "N-smooth" : "NOT N-smooth") << " (N=" << size << ")\n";
  return 0;
}

struct VerifyOpts {
  std::string identity;
  std::optional<std::string> mu;
  std::optional<int> m, n, k, t, t1, t2, big_n;
  bool details = false;
};

int cmd_verify(const VerifyOpts& o) {
  syt_verify_args args;
  syt_verify_args_init(&args);
  std::vector<int> mu;
  if (o.mu) {
    mu = parse_ints(*o.mu, "--mu");
    static const int no_parts = 0;
    args.mu = mu.empty() ? &no_parts : mu.data();
    args.mu_len = mu.size();
  }
  const auto set = [](int& slot, const std::optional<int>& v) {
    if (v) slot = *v;
  };
  set(args.m, o.m);
  set(args.n, o.n);
  set(args.k, o.k);
  set(args.t, o.t);
  set(args.t1, o.t1);
  set(args.t2, o.t2);
  set(args.big_n, o.big_n);
  Report r;
  check(syt_verify(o.identity.c_str(), &args, &r.p));
  const bool conj = syt_report_conjecture(r.p);
  const bool passed = syt_report_passed(r.p);
  std::cout << (conj ? "CONJECTURE " : "") << syt_report_identity(r.p) << ": " << syt_report_title(r.p) << "\n";
  std::cout << "LHS " << syt_report_lhs(r.p) << (passed ? " = " : " != ") << "RHS " << syt_report_rhs(r.p) << "\n";
  const std::size_t nd = syt_report_detail_count(r.p);
  if (o.details)
    for (std::size_t i = 0; i < nd; ++i) std::cout << "  " << syt_report_detail(r.p, i) << "\n";
  std::cout << (passed ? "PASS" : "FAIL") << (conj ? " (CONJECTURE)" : "") << "\n";
  return passed ? 0 : kExitFail;
}

struct ScanOpts {
  std::string family;
  std::optional<std::string> m, n, k;
  std::string kappa;
  std::string format = "text";
  unsigned threads = 0;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

int cmd_scan(const ScanOpts& o) {
  syt_scan_request req;
  syt_scan_request_init(&req);
  req.family = o.family.c_str();
  if (o.m) req.m_range = o.m->c_str();
  if (o.n) req.n_range = o.n->c_str();
  if (o.k) req.k_range = o.k->c_str();
  const std::vector<int> kappa = parse_ints(o.kappa, "--kappa");
  req.kappa = kappa.data();
  req.kappa_len = kappa.size();
  req.threads = o.threads;
  if (const char* env = std::getenv("SYT_ORACLE_MAX_N")) {
    try {
      req.oracle_max_n = std::stoi(env);
    } catch (const std::exception&) {
      throw CLI::ValidationError("SYT_ORACLE_MAX_N", "expected an integer");
    }
  }
  Table t;
  check(syt_scan(&req, &t.p));
  const std::size_t rows = syt_table_rows(t.p);
  const auto smooth = [&](std::size_t i) { return syt_table_smooth(t.p, i) != 0; };

  if (o.format == "csv") {
    std::cout << "family,params,N,count,largest_prime,n_smooth\n";
    for (std::size_t i = 0; i < rows; ++i) {
      std::cout << csv_field(syt_table_family(t.p, i)) << ',' << csv_field(syt_table_params(t.p, i)) << ','
                << syt_table_size(t.p, i) << ',' << syt_table_count(t.p, i) << ','
                << syt_table_largest_prime(t.p, i) << ',' << (smooth(i) ? "true" : "false") << "\n";
    }
  } else if (o.format == "json") {
    nlohmann::ordered_json doc;
    doc["family"] = o.family;
    doc["rows"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < rows; ++i) {
      nlohmann::ordered_json row;
      row["family"] = syt_table_family(t.p, i);
      row["params"] = syt_table_params(t.p, i);
      row["N"] = syt_table_size(t.p, i);
      row["count"] = syt_table_count(t.p, i);
      row["largest_prime"] = syt_table_largest_prime(t.p, i);
      row["n_smooth"] = smooth(i);
      doc["rows"].push_back(std::move(row));
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::vector<std::vector<std::string>> cells = {{"family", "params", "N", "count", "largest_prime", "n_smooth"}};
    for (std::size_t i = 0; i < rows; ++i) {
      cells.push_back({syt_table_family(t.p, i), syt_table_params(t.p, i), std::to_string(syt_table_size(t.p, i)),
                       syt_table_count(t.p, i), syt_table_largest_prime(t.p, i), smooth(i) ? "yes" : "NO"});
    }
    std::vector<std::size_t> width(6, 0);
    for (const auto& line : cells)
      for (std::size_t c = 0; c < 6; ++c) width[c] = std::max(width[c], line[c].size());
    for (const auto& line : cells) {
      std::string out;
      for (std::size_t c = 0; c < 6; ++c) {
        std::string cell = line[c];
        const bool right = c == 2 || c == 3 || c == 4;
        const std::string pad(width[c] - cell.size(), ' ');
        out += right ? pad + cell : cell + pad;
        if (c + 1 < 6) out += "  ";
      }
      while (!out.empty() && out.back() == ' ') out.pop_back();
      std::cout << out << "\n";
    }
  }
  return 0;
}

int cmd_enumerate(const std::string& spec, std::size_t limit) {
  Region r;
  check(syt_region_parse(spec.c_str(), &r.p));
  Tableaux t;
  check(syt_enumerate(r.p, limit, &t.p));
  const int size = syt_region_size(r.p);
  const int rows = syt_region_rows(r.p);
  const int width = static_cast<int>(std::to_string(std::max(size, 1)).size());
  std::vector<std::pair<int, int>> intervals;
  for (int i = 1; i <= rows; ++i) {
    int a = 0, b = 0;
    check(syt_region_row(r.p, i, &a, &b));
    intervals.emplace_back(a, b);
  }
  const std::size_t count = syt_tableaux_count(t.p);
  for (std::size_t k = 0; k < count; ++k) {
    if (k) std::cout << "\n";
    std::cout << "tableau " << k + 1 << "\n";
    const int* labels = syt_tableaux_labels(t.p, k);
    int pos = 0;
    for (const auto& [a, b] : intervals) {
      std::string line(static_cast<std::size_t>((a - 1) * (width + 1)), ' ');
      for (int c = a; c <= b; ++c) {
        std::ostringstream cell;
        cell << std::setw(width) << labels[pos++];
        line += cell.str();
        if (c < b) line += ' ';
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      std::cout << line << "\n";
    }
  }
  std::cout << (count ? "\n" : "") << count << (count == 1 ? " tableau" : " tableaux")
            << (limit && count == limit ? " (limit reached)" : "") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counts of standard Young tableaux of ordinary, shifted and truncated shapes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(syt_version()));

  const std::vector<std::string> methods = {"auto", "formula", "oracle"};

  std::string spec;
  std::string method = "auto";
  bool check_both = false;
  auto* count_cmd = app.add_subcommand("count", "Count the tableaux of a shape");
  count_cmd->add_option("shape", spec, "part:3,2 | shifted:4,2 | stair:4/1 | rect:6x7/2")->required();
  count_cmd->add_option("--method", method, "auto, formula or oracle")->check(CLI::IsMember(methods));
  count_cmd->add_flag("--check", check_both, "Print formula and oracle values and compare them");

  auto* factor_cmd = app.add_subcommand("factor", "Count, factorize and test N-smoothness");
  factor_cmd->add_option("shape", spec, "Shape spec")->required();
  factor_cmd->add_option("--method", method, "auto, formula or oracle")->check(CLI::IsMember(methods));

  VerifyOpts vo;
  std::vector<std::string> identities;
  for (std::size_t i = 0; i < syt_identity_count(); ++i) identities.emplace_back(syt_identity_name(i));
  auto* verify_cmd = app.add_subcommand("verify", "Check a named identity on given parameters");
  verify_cmd->add_option("identity", vo.identity, "One of: " + CLI::detail::join(identities))->required();
  verify_cmd->add_option("--mu", vo.mu, "Partition mu, comma separated (zeros allowed)");
  verify_cmd->add_option("--m", vo.m);
  verify_cmd->add_option("--n", vo.n);
  verify_cmd->add_option("--k", vo.k);
  verify_cmd->add_option("--t", vo.t);
  verify_cmd->add_option("--t1", vo.t1);
  verify_cmd->add_option("--t2", vo.t2);
  verify_cmd->add_option("--N", vo.big_n);
  verify_cmd->add_flag("--details", vo.details, "Print per-term lines");

  ScanOpts so;
  std::vector<std::string> families;
  for (std::size_t i = 0; i < syt_scan_family_count(); ++i) families.emplace_back(syt_scan_family_name(i));
  auto* scan_cmd = app.add_subcommand("scan", "Tabulate counts and smoothness over a family");
  scan_cmd->add_option("--family", so.family, "One of: " + CLI::detail::join(families))->required();
  scan_cmd->add_option("--m", so.m, "Range a..b");
  scan_cmd->add_option("--n", so.n, "Range a..b");
  scan_cmd->add_option("--k", so.k, "Range a..b");
  scan_cmd->add_option("--kappa", so.kappa, "Truncation for stair-trunc / rect-trunc");
  scan_cmd->add_option("--format", so.format)->check(CLI::IsMember({"text", "csv", "json"}));
  scan_cmd->add_option("--threads", so.threads, "Worker threads (0: all cores)");

  std::size_t limit = 0;
  auto* enum_cmd = app.add_subcommand("enumerate", "Print tableaux as grids");
  enum_cmd->add_option("shape", spec, "Shape spec")->required();
  enum_cmd->add_option("--limit", limit, "Stop after this many tableaux")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*count_cmd) return cmd_count(spec, method, check_both);
    if (*factor_cmd) return cmd_factor(spec, method);
    if (*verify_cmd) return cmd_verify(vo);
    if (*scan_cmd) return cmd_scan(so);
    if (*enum_cmd) return cmd_enumerate(spec, limit);
  } catch (const ApiError& e) {
    std::cerr << "error: " << syt_status_name(e.status) << ": " << e.message << "\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
