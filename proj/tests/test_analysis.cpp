#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "analysis.hpp"

using namespace geoscale;

TEST_CASE("window width counts at pinned rationals") {
  CHECK(omega_strict(ExactRatio(5, 4)) == 1);
  CHECK(omega_strict(ExactRatio(4, 3)) == 1);
  CHECK(omega_strict(ExactRatio(3, 2)) == 2);
  CHECK(omega_strict(ExactRatio(7, 4)) == 3);
  CHECK(omega_strict(ExactRatio(2)) == 3);
  CHECK(omega_strict(ExactRatio(2001, 1000)) == 5);
  CHECK(omega_strict(ExactRatio(729, 364)) == 5);
  CHECK(omega_strict(ExactRatio(3)) == 8);
  CHECK(omega_strict(ExactRatio(10)) == 99);

  CHECK(omega_corrected(ExactRatio(5, 4)) == 1);
  CHECK(omega_corrected(ExactRatio(4, 3)) == 1);
  CHECK(omega_corrected(ExactRatio(3, 2)) == 2);
  CHECK(omega_corrected(ExactRatio(2)) == 3);
  CHECK(omega_corrected(ExactRatio(2001, 1000)) == 2);
  CHECK(omega_corrected(ExactRatio(3)) == 4);
  CHECK(omega_corrected(ExactRatio(10)) == 11);

  CHECK_THROWS_AS(omega_strict(ExactRatio(1)), DomainError);
  CHECK_THROWS_AS(omega_corrected(ExactRatio(1, 2)), DomainError);
}

TEST_CASE("the two definitions agree on (1, 2]") {
  for (int i = 1; i <= 200; ++i) {
    ExactRatio alpha = 1 + ExactRatio(i, 200);
    CHECK(omega_strict(alpha) == omega_corrected(alpha));
  }
}

TEST_CASE("counts are monotone within a ceiling band and stay below alpha*b") {
  for (int band = 1; band <= 3; ++band) {
    int prev = 0;
    for (int i = 1; i <= 60; ++i) {
      ExactRatio alpha = band + ExactRatio(i, 60);
      int w = omega_strict(alpha);
      CHECK(w >= prev);
      prev = w;
      // w < alpha * ceil(alpha), cross-multiplied
      ExactInt b = ceil_ratio(alpha);
      CHECK(ExactInt(w) * den(alpha) < num(alpha) * b);
    }
  }
}

TEST_CASE("report carries both counts, the satisfied prefix and notes") {
  OmegaReport plain = omega_report(ExactRatio(4, 3));
  CHECK(plain.omega_strict == 1);
  CHECK(plain.omega_corrected == 1);
  CHECK(plain.ceiling == 2);
  CHECK(plain.satisfied_t == std::vector<int>{1});
  CHECK(plain.note.empty());

  OmegaReport two = omega_report(ExactRatio(2));
  CHECK(two.satisfied_t == std::vector<int>{1, 2, 3});
  CHECK(two.note.empty());

  OmegaReport probe = omega_report(ExactRatio(2001, 1000));
  CHECK(probe.omega_strict == 5);
  CHECK(probe.omega_corrected == 2);
  CHECK(probe.satisfied_t == std::vector<int>{1, 2, 3, 4, 5});
  CHECK_FALSE(probe.note.empty());
  CHECK(probe.note.find("5") != std::string::npos);
  CHECK(probe.note.find("6") != std::string::npos);

  OmegaReport endpoint = omega_report(ExactRatio(729, 364));
  CHECK(endpoint.omega_strict == 5);
  CHECK_FALSE(endpoint.note.empty());
}

TEST_CASE("bands partition (1, alpha_max] with exact breakpoints") {
  std::vector<OmegaBand> up_to_2 =
      omega_bands(OmegaDefinition::Strict, ExactRatio(2));
  std::vector<OmegaBand> expect{
      {ExactRatio(1), ExactRatio(4, 3), 1},
      {ExactRatio(4, 3), ExactRatio(12, 7), 2},
      {ExactRatio(12, 7), ExactRatio(2), 3},
  };
  CHECK(up_to_2 == expect);

  CHECK(omega_bands(OmegaDefinition::Corrected, ExactRatio(2)) == expect);

  std::vector<OmegaBand> beyond =
      omega_bands(OmegaDefinition::Strict, ExactRatio(729, 364));
  REQUIRE(beyond.size() == 4);
  CHECK(beyond[3] == OmegaBand{ExactRatio(2), ExactRatio(729, 364), 5});

  std::vector<OmegaBand> half =
      omega_bands(OmegaDefinition::Strict, ExactRatio(3, 2));
  REQUIRE(half.size() == 2);
  CHECK(half[1] == OmegaBand{ExactRatio(4, 3), ExactRatio(3, 2), 2});

  CHECK_THROWS_AS(omega_bands(OmegaDefinition::Strict, ExactRatio(1)),
                  DomainError);
}

TEST_CASE("band endpoints satisfy the defining relation with equality") {
  // breakpoint for t at ceiling b: alpha = t * b^(t-1) / (b^t - 1)
  for (ExactInt b : {ExactInt(2), ExactInt(3)}) {
    for (unsigned t = 2; t <= 6; ++t) {
      ExactRatio bp(ExactInt(t) * pow_int(b, t - 1), pow_int(b, t) - 1);
      // alpha * b * (1 - b^-t) == t, cross-multiplied
      CHECK(num(bp) * b * (pow_int(b, t) - 1) ==
            ExactInt(t) * den(bp) * pow_int(b, t));
      // at the breakpoint itself the t-th step just fails the strict test,
      // provided the breakpoint actually lies in the ceiling-b band
      if (bp > ExactRatio(b - 1) && bp <= ExactRatio(b))
        CHECK(omega_strict(bp) == static_cast<int>(t) - 1);
    }
  }
  // the pinned beta=2 breakpoints
  std::vector<OmegaBand> bands =
      omega_bands(OmegaDefinition::Strict, ExactRatio(2));
  CHECK(bands[0].hi == ExactRatio(4, 3));
  CHECK(bands[1].hi == ExactRatio(12, 7));
}

TEST_CASE("every band value matches a direct count at both ends") {
  for (OmegaDefinition def :
       {OmegaDefinition::Strict, OmegaDefinition::Corrected}) {
    std::vector<OmegaBand> bands = omega_bands(def, ExactRatio(3));
    ExactRatio prev_hi(1);
    for (const OmegaBand& band : bands) {
      CHECK(band.lo == prev_hi);
      prev_hi = band.hi;
      ExactRatio mid = (band.lo + band.hi) / 2;
      int at_hi = def == OmegaDefinition::Strict ? omega_strict(band.hi)
                                                 : omega_corrected(band.hi);
      int at_mid = def == OmegaDefinition::Strict ? omega_strict(mid)
                                                  : omega_corrected(mid);
      CHECK(at_hi == band.omega);
      CHECK(at_mid == band.omega);
    }
    CHECK(prev_hi == 3);
  }
}

TEST_CASE("halving predictions by exact iteration") {
  CHECK(predicted_halvings(ExactRatio(4), ExactRatio(2), 3,
                           HaltMode::Literal) == 4);
  CHECK(predicted_halvings(ExactRatio(128), ExactRatio(2), 6,
                           HaltMode::Literal) == 10);
  CHECK(predicted_halvings(ExactRatio(4), ExactRatio(2), 3,
                           HaltMode::EarlyStop) == 3);
  CHECK(predicted_halvings(ExactRatio(64, 3), ExactRatio(4, 3), 4,
                           HaltMode::Literal) == 16);
  CHECK(predicted_halvings(ExactRatio(2), ExactRatio(2), 1,
                           HaltMode::Literal) == 2);
  CHECK(predicted_halvings(ExactRatio(1, 3), ExactRatio(2), 2,
                           HaltMode::Literal) == 0);
  CHECK_THROWS_AS(predicted_halvings(ExactRatio(0), ExactRatio(2), 3,
                                     HaltMode::Literal),
                  DomainError);
  CHECK_THROWS_AS(predicted_halvings(ExactRatio(4), ExactRatio(1), 3,
                                     HaltMode::Literal),
                  DomainError);
}

TEST_CASE("check 2.1 matches for n = 3..8") {
  for (int n = 3; n <= 8; ++n) {
    TheoremReport r = verify_theorem(TheoremId::StepCountMra, n);
    CHECK(r.match);
    CHECK(r.observed_augment == n);
    CHECK(r.notes.empty());
  }
  CHECK(verify_theorem(TheoremId::StepCountMra, 3).observed_halve == 4);
  CHECK(verify_theorem(TheoremId::StepCountMra, 8).observed_halve == 8);
  CHECK_THROWS_AS(verify_theorem(TheoremId::StepCountMra, 2), DomainError);
}

TEST_CASE("check 3.1 matches and jumps by three") {
  TheoremReport r6 = verify_theorem(TheoremId::StepCountPow2, 6);
  CHECK(r6.match);
  CHECK(r6.observed_augment == 2);
  CHECK(r6.observed_halve == 10);
  CHECK(r6.mu0 == ExactRatio(128));
  CHECK(r6.notes == "max_jump=3");

  for (int n : {7, 8, 9, 21}) {
    TheoremReport r = verify_theorem(TheoremId::StepCountPow2, n);
    CHECK(r.match);
    CHECK(r.observed_augment == (n + 2) / 3);
  }
}

TEST_CASE("check 4.4 fixes alpha at 4/3 and matches with unit jumps") {
  for (int n : {4, 6, 10}) {
    TheoremReport r = verify_theorem(TheoremId::StepCountFourThirds, n);
    CHECK(r.match);
    CHECK(r.observed_augment == n);
    CHECK(r.alpha == ExactRatio(4, 3));
    CHECK(r.notes.find("max_jump=1") != std::string::npos);
  }
  CHECK(verify_theorem(TheoremId::StepCountFourThirds, 4).observed_halve == 16);
  VerifyOverrides other;
  other.alpha = ExactRatio(3, 2);
  CHECK_THROWS_AS(verify_theorem(TheoremId::StepCountFourThirds, 4, other),
                  DomainError);
}

TEST_CASE("check 4.1 reports honest mismatches where the count falls short") {
  VerifyOverrides ov;
  ov.alpha = ExactRatio(2);
  TheoremReport at2 = verify_theorem(TheoremId::StepCountAlpha, 6, ov);
  CHECK(at2.match);
  CHECK(at2.observed_augment == 2);
  CHECK(at2.mu0 == ExactRatio(128));

  ov.alpha = ExactRatio(5, 4);
  TheoremReport at54 = verify_theorem(TheoremId::StepCountAlpha, 6, ov);
  CHECK(at54.match);
  CHECK(at54.observed_augment == 6);

  // after every double jump the window is too narrow for another, so the
  // engine needs more augmenting steps than n/omega
  ov.alpha = ExactRatio(3, 2);
  TheoremReport at32 = verify_theorem(TheoremId::StepCountAlpha, 12, ov);
  CHECK_FALSE(at32.match);
  CHECK(at32.predicted_augment == 6);
  CHECK(at32.observed_augment == 8);
  CHECK(at32.observed_halve == at32.predicted_halve);

  ov.alpha = ExactRatio(7, 4);
  TheoremReport at74 = verify_theorem(TheoremId::StepCountAlpha, 12, ov);
  CHECK_FALSE(at74.match);
  CHECK(at74.predicted_augment == 4);
  CHECK(at74.observed_augment == 8);

  ov.alpha = ExactRatio(5, 2);
  CHECK_THROWS_AS(verify_theorem(TheoremId::StepCountAlpha, 6, ov), DomainError);
  try {
    verify_theorem(TheoremId::StepCountAlpha, 6, ov);
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("sweep") != std::string::npos);
  }
  CHECK_THROWS_AS(verify_theorem(TheoremId::StepCountAlpha, 6), DomainError);
}

TEST_CASE("largest observed jumps per divisor and policy") {
  Policy max_gain{PolicyKind::MaxGain, 0};
  Policy min_gain{PolicyKind::MinGain, 0};
  CHECK(max_jump_empirical(12, ExactRatio(2), max_gain) == 3);
  CHECK(max_jump_empirical(12, ExactRatio(4, 3), max_gain) == 1);
  CHECK(max_jump_empirical(12, ExactRatio(2), min_gain) == 1);
}

TEST_CASE("sweep rows cover alpha beyond 2 via the corrected count") {
  Policy max_gain{PolicyKind::MaxGain, 0};

  SweepRow at3 = sweep_point(12, ExactRatio(3), max_gain);
  CHECK(at3.omega == 4);
  CHECK(at3.report.predicted_augment == 3);
  CHECK(at3.report.observed_augment == 3);
  CHECK(at3.report.observed_halve == 16);
  CHECK(at3.max_jump == 4);
  CHECK(at3.report.match);

  SweepRow at52 = sweep_point(8, ExactRatio(5, 2), max_gain);
  CHECK(at52.omega == 3);
  CHECK(at52.report.predicted_augment == 3);
  CHECK(at52.report.observed_augment == 5);
  CHECK(at52.max_jump == 3);
  CHECK_FALSE(at52.report.match);

  // the corrected count bounds every observed jump
  for (ExactRatio alpha : {ExactRatio(4, 3), ExactRatio(3, 2), ExactRatio(2),
                           ExactRatio(5, 2), ExactRatio(3)}) {
    SweepRow row = sweep_point(9, alpha, max_gain);
    CHECK(row.max_jump <= row.omega);
  }
}

TEST_CASE("sweeps run the grid and sort by alpha then n") {
  std::vector<SweepRow> rows =
      run_sweep({ExactRatio(2), ExactRatio(4, 3)}, {4, 3},
                Policy{PolicyKind::MaxGain, 0});
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].report.alpha == ExactRatio(4, 3));
  CHECK(rows[0].report.n == 3);
  CHECK(rows[1].report.alpha == ExactRatio(4, 3));
  CHECK(rows[1].report.n == 4);
  CHECK(rows[2].report.alpha == ExactRatio(2));
  CHECK(rows[2].report.n == 3);
  CHECK(rows[3].report.alpha == ExactRatio(2));
  CHECK(rows[3].report.n == 4);
  for (const SweepRow& row : rows)
    CHECK(row.report.match ==
          (row.report.predicted_augment == row.report.observed_augment &&
           row.report.predicted_halve == row.report.observed_halve));
}

TEST_CASE("report serialization stays stable") {
  TheoremReport r = verify_theorem(TheoremId::StepCountMra, 3);
  CHECK(report_csv_header() ==
        "theorem,n,alpha,policy,mu0,predicted_augment,observed_augment,"
        "predicted_halve,observed_halve,match");
  CHECK(report_csv_row(r) == "2.1,3,2,mra,4,3,3,4,4,true");

  std::string json = theorem_report_json(r);
  CHECK(json.find("\"theorem\":\"2.1\"") != std::string::npos);
  CHECK(json.find("\"match\":true") != std::string::npos);
  CHECK(theorem_report_json(verify_theorem(TheoremId::StepCountMra, 3)) == json);

  std::string text = render_reports_text({r});
  CHECK(text.find("theorem") != std::string::npos);
  CHECK(text.find("2.1") != std::string::npos);

  OmegaReport om = omega_report(ExactRatio(4, 3));
  CHECK(omega_report_json(om) ==
        R"({"alpha":"4/3","ceiling":"2","omega_strict":1,"omega_corrected":1,)"
        R"("satisfied_t":[1],"note":""})");

  std::vector<OmegaBand> bands =
      omega_bands(OmegaDefinition::Strict, ExactRatio(2));
  CHECK(omega_bands_json(bands) ==
        R"([{"lo":"1","hi":"4/3","omega":1},{"lo":"4/3","hi":"12/7","omega":2},)"
        R"({"lo":"12/7","hi":"2","omega":3}])");
  CHECK(omega_bands_csv(bands) ==
        "lo,hi,omega\n1,4/3,1\n4/3,12/7,2\n12/7,2,3\n");
}

TEST_CASE("list parsing for sweep inputs") {
  CHECK(parse_n_list("3..8,12") == std::vector<int>{3, 4, 5, 6, 7, 8, 12});
  CHECK(parse_n_list("7") == std::vector<int>{7});
  CHECK(parse_n_list("5,3,5") == std::vector<int>{3, 5});
  CHECK_THROWS_AS(parse_n_list("8..3"), ParseError);
  CHECK_THROWS_AS(parse_n_list(""), ParseError);
  CHECK_THROWS_AS(parse_n_list("x"), ParseError);

  std::vector<ExactRatio> alphas = parse_alpha_list("2,4/3");
  REQUIRE(alphas.size() == 2);
  CHECK(alphas[0] == ExactRatio(4, 3));
  CHECK(alphas[1] == ExactRatio(2));
  CHECK_THROWS_AS(parse_alpha_list("4/3,"), ParseError);
}
