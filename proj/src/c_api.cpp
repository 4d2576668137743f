#include "wass1d/wass1d.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "wass1d/error.hpp"
#include "wass1d/isometry.hpp"
#include "wass1d/json_io.hpp"
#include "wass1d/metric.hpp"
#include "wass1d/random.hpp"
#include "wass1d/suites.hpp"
#include "wass1d/unit_interval.hpp"

struct w1d_measure {
  wass1d::Measure value;
};

struct w1d_isometry {
  wass1d::IsometryDescriptor value;
};

namespace {

thread_local std::string last_error;

w1d_status status_of(wass1d::ErrorCode code) {
  return static_cast<w1d_status>(static_cast<int>(code) + 1);
}

template <class F>
w1d_status guarded(F&& f) {
  last_error.clear();
  try {
    f();
    return W1D_OK;
  } catch (const wass1d::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown failure";
  }
  return W1D_INTERNAL_ERROR;
}

char* copy_out(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) wass1d::fail(wass1d::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

}  // namespace

extern "C" {

const char* w1d_status_name(w1d_status status) {
  if (status == W1D_OK) return "Ok";
  if (status == W1D_INTERNAL_ERROR) return "InternalError";
  const int code = static_cast<int>(status) - 1;
  if (code < 0 || code > static_cast<int>(wass1d::ErrorCode::UnknownSuite)) return "Unknown";
  return wass1d::to_string(static_cast<wass1d::ErrorCode>(code));
}

const char* w1d_last_error(void) { return last_error.c_str(); }

void w1d_string_free(char* text) { std::free(text); }

w1d_status w1d_measure_from_json(const char* json, w1d_measure** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new w1d_measure{wass1d::measure_from_json(json)};
  });
}

w1d_status w1d_measure_to_json(const w1d_measure* mu, char** out) {
  return guarded([&] {
    require(mu, "measure");
    require(out, "out");
    *out = copy_out(wass1d::measure_to_json(mu->value));
  });
}

void w1d_measure_free(w1d_measure* mu) { delete mu; }

w1d_status w1d_distance(const w1d_measure* mu, const w1d_measure* nu, double p, double* out) {
  return guarded([&] {
    require(mu, "first measure");
    require(nu, "second measure");
    require(out, "out");
    *out = wass1d::wasserstein_distance(mu->value, nu->value, p);
  });
}

w1d_status w1d_isometry_from_json(const char* json, w1d_isometry** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new w1d_isometry{wass1d::descriptor_from_json(json)};
  });
}

void w1d_isometry_free(w1d_isometry* iso) { delete iso; }

w1d_status w1d_apply(const w1d_isometry* iso, const w1d_measure* mu, w1d_measure** out) {
  return guarded([&] {
    require(iso, "isometry");
    require(mu, "measure");
    require(out, "out");
    *out = new w1d_measure{wass1d::apply(iso->value, mu->value)};
  });
}

size_t w1d_suite_count(void) { return wass1d::suite_catalog().size(); }

const char* w1d_suite_id(size_t index) {
  const auto& catalog = wass1d::suite_catalog();
  return index < catalog.size() ? catalog[index].id.c_str() : nullptr;
}

w1d_status w1d_verify(const char* suite_id, int trials, uint64_t seed, char** csv,
                      char** summary, int* passed) {
  return guarded([&] {
    require(suite_id, "suite id");
    const auto reports = wass1d::run_suite(suite_id, trials, seed);
    std::string lines;
    for (const auto& r : reports) lines += r.summary() + "\n";
    char* csv_text = csv ? copy_out(wass1d::to_csv(reports)) : nullptr;
    try {
      if (summary) *summary = copy_out(lines);
    } catch (...) {
      std::free(csv_text);
      throw;
    }
    if (csv) *csv = csv_text;
    if (passed) *passed = wass1d::all_passed(reports) ? 1 : 0;
  });
}

w1d_status w1d_generate_qn(int n, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = copy_out(wass1d::measures_to_json(wass1d::qn_elements(n)));
  });
}

w1d_status w1d_generate_mn_random(int n, uint64_t seed, char** out) {
  return guarded([&] {
    require(out, "out");
    if (n < 0 || n > 20) wass1d::fail(wass1d::ErrorCode::InvalidArgument, "n must be in 0..20");
    wass1d::Rng rng(seed);
    std::vector<double> positions(std::size_t{1} << n);
    for (double& x : positions) x = rng.uniform();
    std::sort(positions.begin(), positions.end());
    *out = copy_out(wass1d::measures_to_json({wass1d::mn_element(positions)}));
  });
}

w1d_status w1d_generate_slice_extremal(double t, char** out) {
  return guarded([&] {
    require(out, "out");
    const auto [a, b] = wass1d::slice_extremal_pair(t);
    *out = copy_out(wass1d::measures_to_json({a, b}));
  });
}

w1d_status w1d_generate_two_point(double x, double sigma, double p, char** out) {
  return guarded([&] {
    require(out, "out");
    const auto mu = wass1d::two_point_from_param({x, sigma, p});
    *out = copy_out(wass1d::measures_to_json({mu.to_measure()}));
  });
}

}  // extern "C"
