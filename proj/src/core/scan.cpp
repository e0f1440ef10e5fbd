#include "core/scan.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <mutex>
#include <thread>

#include "core/descriptor.hpp"
#include "core/error.hpp"
#include "core/exact_count.hpp"
#include "core/factorize.hpp"
#include "core/truncated.hpp"

namespace syt {

namespace {

int range_int(std::string_view s, std::string_view whole) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    fail(Errc::invalid_argument, "bad range '" + std::string(whole) + "'");
  return v;
}

enum class Param { m, n, k };

struct Family {
  const char* name;
  std::vector<Param> params;
  bool oracle;
};

const std::vector<Family>& families() {
  static const std::vector<Family> f = {
      {"stair-sq", {Param::m, Param::k}, false},
      {"stair-sq+1", {Param::m, Param::k}, false},
      {"rect-sq", {Param::m, Param::n, Param::k}, false},
      {"rect-sq+1", {Param::m, Param::n, Param::k}, false},
      {"stair-corner", {Param::m}, false},
      {"rect-corner", {Param::m, Param::n}, false},
      {"square-minus-two", {Param::n}, true},
      {"stair-trunc", {Param::m}, true},
      {"rect-trunc", {Param::m, Param::n}, true},
  };
  return f;
}

struct Tuple {
  int m = 0;
  int n = 0;
  int k = 0;
};

struct Job {
  Tuple tuple;
  std::string params;
  ShapeDescriptor shape;
  int size = 0;
};

std::string param_string(const Family& fam, const Tuple& t) {
  std::string out;
  for (Param p : fam.params) {
    if (!out.empty()) out += ',';
    switch (p) {
      case Param::m: out += "m=" + std::to_string(t.m); break;
      case Param::n: out += "n=" + std::to_string(t.n); break;
      case Param::k: out += "k=" + std::to_string(t.k); break;
    }
  }
  return out;
}

// Shape for a tuple, or nullopt when the tuple is outside the family.
std::optional<ShapeDescriptor> shape_for(const std::string& fam, const Tuple& t, const Partition& kappa) {
  if (t.m < 0 || t.n < 0 || t.k < 0) return std::nullopt;
  if (fam == "stair-sq") return t.k >= 2 ? std::optional(stair_minus_square_shape(t.m, t.k)) : std::nullopt;
  if (fam == "stair-sq+1") return t.k >= 1 ? std::optional(stair_minus_square_plus1_shape(t.m, t.k)) : std::nullopt;
  if (fam == "rect-sq") return t.k >= 2 ? std::optional(rect_minus_square_shape(t.m, t.n, t.k)) : std::nullopt;
  if (fam == "rect-sq+1")
    return t.k >= 1 ? std::optional(rect_minus_square_plus1_shape(t.m, t.n, t.k)) : std::nullopt;
  if (fam == "stair-corner") return stair_minus_corner_shape(t.m);
  if (fam == "rect-corner") return rect_minus_corner_shape(t.m, t.n);
  if (fam == "square-minus-two") return t.n >= 2 ? std::optional(square_minus_two_shape(t.n)) : std::nullopt;
  ShapeDescriptor d;
  d.kappa = kappa;
  if (fam == "stair-trunc") {
    d.family = ShapeDescriptor::Family::stair;
    d.m = t.m;
  } else {
    d.family = ShapeDescriptor::Family::rect;
    d.m = t.m;
    d.n = t.n;
  }
  try {
    (void)build_region(d);
  } catch (const Error&) {
    return std::nullopt;
  }
  return d;
}

BigInt closed_form(const std::string& fam, const Tuple& t) {
  if (fam == "stair-sq") return count_stair_minus_square(t.m, t.k);
  if (fam == "stair-sq+1") return count_stair_minus_square_plus1(t.m, t.k);
  if (fam == "rect-sq") return count_rect_minus_square(t.m, t.n, t.k);
  if (fam == "rect-sq+1") return count_rect_minus_square_plus1(t.m, t.n, t.k);
  if (fam == "stair-corner") return count_stair_minus_corner(t.m);
  return count_rect_minus_corner(t.m, t.n);
}

}  // namespace

IntRange parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int v = range_int(text, text);
    return {v, v};
  }
  return {range_int(text.substr(0, dots), text), range_int(text.substr(dots + 2), text)};
}

const std::vector<std::string>& scan_families() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const Family& f : families()) out.push_back(f.name);
    return out;
  }();
  return names;
}

std::vector<ScanRow> run_scan(const ScanRequest& req) {
  const auto it = std::find_if(families().begin(), families().end(),
                               [&](const Family& f) { return req.family == f.name; });
  if (it == families().end()) fail(Errc::unknown_family, "unknown scan family '" + req.family + "'");
  const Family& fam = *it;

  const auto range_of = [&](Param p) -> IntRange {
    const std::optional<IntRange>* r = p == Param::m ? &req.m : p == Param::n ? &req.n : &req.k;
    const char* name = p == Param::m ? "m" : p == Param::n ? "n" : "k";
    if (!*r) fail(Errc::invalid_argument, std::string("family ") + fam.name + " needs --" + name);
    return **r;
  };
  const auto used = [&](Param p) { return std::find(fam.params.begin(), fam.params.end(), p) != fam.params.end(); };
  const IntRange rm = used(Param::m) ? range_of(Param::m) : IntRange{0, 0};
  const IntRange rn = used(Param::n) ? range_of(Param::n) : IntRange{0, 0};
  const IntRange rk = used(Param::k) ? range_of(Param::k) : IntRange{0, 0};

  std::vector<Job> jobs;
  for (int m = rm.lo; m <= rm.hi; ++m)
    for (int n = rn.lo; n <= rn.hi; ++n)
      for (int k = rk.lo; k <= rk.hi; ++k) {
        const Tuple t{m, n, k};
        const auto shape = shape_for(fam.name, t, req.kappa);
        if (!shape) continue;
        const int size = build_region(*shape).size();
        if (fam.oracle && size > req.oracle_max_n) {
          fail(Errc::range_too_large, shape->to_string() + " has " + std::to_string(size) +
                                          " cells; the oracle budget is " + std::to_string(req.oracle_max_n));
        }
        jobs.push_back({t, param_string(fam, t), *shape, size});
      }

  std::vector<ScanRow> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  const auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      try {
        const Job& job = jobs[i];
        ScanRow row;
        row.family = fam.name;
        row.params = job.params;
        row.size = job.size;
        row.count = fam.oracle ? count_syt(build_region(job.shape)) : closed_form(fam.name, job.tuple);
        const Factorization f = factorize(row.count);
        row.largest_prime = f.largest_prime;
        row.n_smooth = f.complete && f.largest_prime <= std::max(job.size, 1);
        rows[i] = std::move(row);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  unsigned threads = req.threads ? req.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, jobs.size()));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  if (!jobs.empty()) worker();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return rows;
}

}  // namespace syt
