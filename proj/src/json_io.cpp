#include "psm/json_io.hpp"

namespace psm {

json semigroup_json(const NumericalSemigroup& s) {
  return json{{"generators", s.min_generators},
              {"gaps", s.gaps},
              {"frobenius", s.frobenius},
              {"genus", s.genus},
              {"multiplicity", s.multiplicity}};
}

json pm_triple_json(const PMTriple& t) {
  return json{{"a", t.a}, {"b", t.b}, {"c", t.c}};
}

json regions_json(const std::vector<AdmissibleRegion>& regions) {
  json out = json::array();
  for (const AdmissibleRegion& r : regions) {
    out.push_back(json{
        {"family", to_string(r.family)},
        {"alpha", json{{"lo", r.alpha_lo.str()},
                       {"lo_open", true},
                       {"hi", r.alpha_hi.str()},
                       {"hi_open", false}}},
        {"beta", json{{"lo", r.beta_lo.str()},
                      {"lo_open", false},
                      {"hi", r.beta_hi.str()},
                      {"hi_open", true}}}});
  }
  return out;
}

json triple_regions_json(const std::vector<TripleRegion>& regions) {
  json out = json::array();
  for (const TripleRegion& r : regions) {
    out.push_back(json{
        {"family", to_string(r.family)},
        {"m", r.m},
        {"p", json{{"lo", r.p_lo.str()},
                   {"lo_open", false},
                   {"hi", r.p_hi.str()},
                   {"hi_open", true}}},
        {"q_offset", json{{"lo", r.q_offset_lo.str()},
                          {"lo_open", false},
                          {"hi", r.q_offset_hi.str()},
                          {"hi_open", true}}}});
  }
  return out;
}

json bezout_json(const BezoutSequence& seq) {
  json out = json::array();
  for (const Rational& t : seq.terms) out.push_back(t.str());
  return out;
}

json extrema_report_json(const ExtremaReport& rep) {
  return json{{"agree", rep.agree},
              {"max", json{{"value", rep.max_value.str()}, {"arg", rep.max_arg}}},
              {"min", json{{"value", rep.min_value.str()}, {"arg", rep.min_arg}}},
              {"detail", rep.detail}};
}

json region_scan_json(const RegionScanReport& rep) {
  json ces = json::array();
  for (const RegionCounterexample& c : rep.counterexamples)
    ces.push_back(json{{"alpha", c.alpha.str()},
                       {"beta", c.beta.str()},
                       {"characterized", c.characterized},
                       {"semigroup_equal", c.semigroup_equal}});
  return json{{"checks_run", rep.checks_run}, {"counterexamples", ces}};
}

}  // namespace psm
