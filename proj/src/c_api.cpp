#include "psm.h"

#include <cstring>
#include <string>

#include "psm/apchar.hpp"
#include "psm/bezout.hpp"
#include "psm/errors.hpp"
#include "psm/intervals.hpp"
#include "psm/json_io.hpp"
#include "psm/oracle.hpp"
#include "psm/propmod.hpp"
#include "psm/semigroup.hpp"

struct psm_semigroup {
  psm::NumericalSemigroup value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
psm_status guarded(Fn&& fn) {
  try {
    fn();
    return PSM_OK;
  } catch (const psm::parse_error& e) {
    g_last_error = e.what();
    return PSM_ERR_PARSE;
  } catch (const psm::capacity_error& e) {
    g_last_error = e.what();
    return PSM_ERR_CAPACITY;
  } catch (const psm::overflow_error& e) {
    g_last_error = e.what();
    return PSM_ERR_OVERFLOW;
  } catch (const psm::domain_error& e) {
    g_last_error = e.what();
    return PSM_ERR_DOMAIN;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PSM_ERR_INTERNAL;
  }
}

std::string dump(const psm::json& j) { return j.dump(); }

}  // namespace

extern "C" {

const char* psm_last_error(void) { return g_last_error.c_str(); }

void psm_string_free(char* s) { delete[] s; }

psm_status psm_semigroup_from_generators(const long long* gens, size_t count,
                                         psm_semigroup** out) {
  return guarded([&] {
    std::vector<psm::i64> v(gens, gens + count);
    *out = new psm_semigroup{psm::sgp_from_generators(v)};
  });
}

psm_status psm_semigroup_from_ap(long long a, long long d, long long k,
                                 psm_semigroup** out) {
  return guarded([&] {
    *out = new psm_semigroup{psm::ap_semigroup(psm::APSpec(a, d, k))};
  });
}

psm_status psm_semigroup_from_pm(long long a, long long b, long long c,
                                 psm_semigroup** out) {
  return guarded([&] {
    *out = new psm_semigroup{psm::pm_semigroup(psm::PMTriple(a, b, c))};
  });
}

psm_status psm_semigroup_from_interval(const char* lo, const char* hi,
                                       psm_semigroup** out) {
  return guarded([&] {
    psm::ClosedInterval I(psm::Rational::parse(lo), psm::ExtRational::parse(hi));
    *out = new psm_semigroup{psm::interval_semigroup(I)};
  });
}

void psm_semigroup_free(psm_semigroup* s) { delete s; }

long long psm_semigroup_frobenius(const psm_semigroup* s) { return s->value.frobenius; }
long long psm_semigroup_genus(const psm_semigroup* s) { return s->value.genus; }
long long psm_semigroup_multiplicity(const psm_semigroup* s) {
  return s->value.multiplicity;
}
size_t psm_semigroup_gap_count(const psm_semigroup* s) { return s->value.gaps.size(); }
void psm_semigroup_gaps(const psm_semigroup* s, long long* out) {
  std::memcpy(out, s->value.gaps.data(), s->value.gaps.size() * sizeof(long long));
}
size_t psm_semigroup_generator_count(const psm_semigroup* s) {
  return s->value.min_generators.size();
}
void psm_semigroup_generators(const psm_semigroup* s, long long* out) {
  std::memcpy(out, s->value.min_generators.data(),
              s->value.min_generators.size() * sizeof(long long));
}
int psm_semigroup_contains(const psm_semigroup* s, long long x) {
  return s->value.contains(x) ? 1 : 0;
}

psm_status psm_semigroup_to_json(const psm_semigroup* s, char** out_json) {
  return guarded([&] { *out_json = dup_string(dump(psm::semigroup_json(s->value))); });
}

psm_status psm_gaps_json(long long a, long long d, long long k, char** out_json) {
  return guarded([&] {
    psm::APSpec spec(a, d, k);
    std::vector<psm::i64> gaps = psm::ap_gaps(spec);
    psm::json j{{"gaps", gaps},
                {"frobenius", gaps.empty() ? -1 : gaps.back()},
                {"genus", static_cast<psm::i64>(gaps.size())}};
    *out_json = dup_string(dump(j));
  });
}

psm_status psm_frobenius_json(long long a, long long d, long long k, char** out_json) {
  return guarded([&] {
    psm::json j{{"frobenius", psm::ap_frobenius(psm::APSpec(a, d, k))}};
    *out_json = dup_string(dump(j));
  });
}

psm_status psm_from_interval_json(const char* lo, const char* hi, char** out_json) {
  return guarded([&] {
    psm::ClosedInterval I(psm::Rational::parse(lo), psm::ExtRational::parse(hi));
    *out_json = dup_string(dump(psm::semigroup_json(psm::interval_semigroup(I))));
  });
}

psm_status psm_from_pm_json(long long a, long long b, long long c, char** out_json) {
  return guarded([&] {
    psm::PMTriple t(a, b, c);
    psm::json j{{"triple", psm::pm_triple_json(t)},
                {"semigroup", psm::semigroup_json(psm::pm_semigroup(t))}};
    *out_json = dup_string(dump(j));
  });
}

psm_status psm_pm_dual_json(long long a, long long b, long long c, char** out_json) {
  return guarded([&] {
    psm::PMTriple dual = psm::pm_dual(psm::PMTriple(a, b, c));
    *out_json = dup_string(dump(psm::pm_triple_json(dual)));
  });
}

psm_status psm_interval_dual_json(const char* lo, const char* hi, char** out_json) {
  return guarded([&] {
    psm::ClosedInterval I(psm::Rational::parse(lo), psm::ExtRational::parse(hi));
    psm::ClosedInterval dual = psm::interval_dual(I);
    psm::json j{{"lo", dual.lo.str()}, {"hi", dual.hi.str()}};
    *out_json = dup_string(dump(j));
  });
}

psm_status psm_bezout_json(const char* lo, const char* hi, char** out_json) {
  return guarded([&] {
    psm::BezoutSequence seq =
        psm::bezout_between(psm::Rational::parse(lo), psm::Rational::parse(hi));
    *out_json = dup_string(dump(psm::bezout_json(seq)));
  });
}

psm_status psm_is_pm_json(const long long* gens, size_t count, char** out_json) {
  return guarded([&] {
    std::vector<psm::i64> v(gens, gens + count);
    psm::PMCheck check = psm::is_prop_modular(psm::sgp_from_generators(v));
    psm::json j{{"proportionally_modular", check.proportionally_modular}};
    if (check.witness)
      j["witness"] = *check.witness;
    else
      j["witness"] = nullptr;
    *out_json = dup_string(dump(j));
  });
}

psm_status psm_characterize_json(long long a, long long d, long long k,
                                 char** out_json) {
  return guarded([&] {
    auto regions = psm::theorem_I_regions(psm::APSpec(a, d, k));
    *out_json = dup_string(dump(psm::regions_json(regions)));
  });
}

psm_status psm_characterize_point(long long a, long long d, long long k,
                                  const char* alpha, const char* beta, int* inside) {
  return guarded([&] {
    bool r = psm::characterize_interval(psm::APSpec(a, d, k),
                                        psm::Rational::parse(alpha),
                                        psm::ExtRational::parse(beta));
    *inside = r ? 1 : 0;
  });
}

psm_status psm_triple_regions_json(long long a, long long d, long long k,
                                   long long m, char** out_json) {
  return guarded([&] {
    auto regions = psm::theorem_II_regions(psm::APSpec(a, d, k), m);
    *out_json = dup_string(dump(psm::triple_regions_json(regions)));
  });
}

psm_status psm_characterize_triple(long long a, long long d, long long k,
                                   long long p, long long m, long long q,
                                   int* inside) {
  return guarded([&] {
    bool r = psm::characterize_triple(psm::APSpec(a, d, k), p, m, q);
    *inside = r ? 1 : 0;
  });
}

psm_status psm_verify_json(long long a_max, long long d_max, long long denom_bound,
                           long long triple_bound, char** out_json) {
  return guarded([&] {
    std::string lines;
    for (psm::i64 a = 2; a <= a_max; ++a) {
      for (psm::i64 d = 1; d <= d_max; ++d) {
        if (psm::gcd_nonneg(a, d) != 1) continue;
        for (psm::i64 k = 2; k <= a; ++k) {
          psm::APSpec spec(a, d, k);
          psm::json rec{{"params", psm::json{{"a", a}, {"d", d}, {"k", k}}}};
          psm::i64 checks = 0;
          psm::json ces = psm::json::array();

          // Closed-form gap set against the naive sieve.
          std::vector<psm::i64> gaps = psm::ap_gaps(spec);
          psm::i64 frob = psm::ap_frobenius(spec);
          auto member = psm::naive_semigroup(spec.generators(), frob + 1);
          std::vector<psm::i64> sieved;
          for (psm::i64 x = 1; x <= frob + 1; ++x)
            if (!member[static_cast<size_t>(x)]) sieved.push_back(x);
          ++checks;
          if (gaps != sieved) ces.push_back("gap formula disagrees with sieve");

          psm::ExtremaReport ex = psm::scan_extrema(spec);
          ++checks;
          if (!ex.agree) ces.push_back("extrema: " + ex.detail);

          psm::RegionScanReport rs = psm::scan_regions(spec, denom_bound);
          checks += rs.checks_run;
          for (const auto& c : rs.counterexamples)
            ces.push_back("region: alpha=" + c.alpha.str() + " beta=" + c.beta.str());

          rec["checks_run"] = checks;
          rec["counterexamples"] = ces;
          lines += dump(rec);
          lines += "\n";
        }
      }
    }
    psm::ConversionSweepReport conv = psm::scan_pm_conversions(triple_bound);
    psm::json rec{{"params", psm::json{{"triple_bound", triple_bound}}},
                  {"checks_run", conv.checks_run},
                  {"counterexamples", conv.counterexamples}};
    lines += dump(rec);
    lines += "\n";
    *out_json = dup_string(lines);
  });
}

}  // extern "C"
