#include "catch2/catch_amalgamated.hpp"
#include "frlim/verify.hpp"
#include "oracles.hpp"

using namespace frlim;
using K = Tag::Kind;

TEST_CASE("builtin table is well formed", "[frcode]") {
  const auto& table = builtin_table();
  CHECK(table.size() == 24);
  for (const auto& row : table) CHECK_NOTHROW(parse_fr_expr(row.code));

  CHECK(table[1].code == "r");
  CHECK(table[1].tags[0] == Tag::of(K::AugIdealTensorPower, 1));
  CHECK(table[1].tags[1].is_zero());

  // every cell of the "f" row vanishes
  for (const Tag& t : table[0].tags) CHECK(t.is_zero());
}

TEST_CASE("recognize the named families", "[frcode]") {
  auto tag = [](const std::string& text, long i) {
    return recognize(FrCode::parse(text, i));
  };
  CHECK(tag("f", 1).is_zero());
  CHECK(tag("f", 3).is_zero());
  CHECK(tag("ff", 2).is_zero());
  CHECK(tag("r", 1) == Tag::of(K::AugIdealTensorPower, 1));
  CHECK(tag("r", 2).is_zero());
  CHECK(tag("rrr", 3) == Tag::of(K::AugIdealTensorPower, 3));
  CHECK(tag("rrr", 2).is_zero());
  CHECK(tag("fr+rf", 1) == Tag::of(K::AugModTensor, 2));
  CHECK(tag("ffr+frf+rff", 1) == Tag::of(K::AugModTensor, 3));
  CHECK(tag("r+ff", 1) == Tag::of(K::GabTensorPower, 1));
  CHECK(tag("r+fff", 1) == Tag::of(K::AugQuotient, 3));
  CHECK(tag("rr+fff", 1) == Tag::of(K::DerivedTensor, 2, 1));
  CHECK(tag("rr+fff", 2) == Tag::of(K::GabTensorPower, 2));
  CHECK(tag("rr+fff", 3).is_zero());
  CHECK(tag("rrr+ffff", 1) == Tag::of(K::DerivedTensor, 3, 2));
  CHECK(tag("rrr+ffff", 3) == Tag::of(K::GabTensorPower, 3));
  CHECK(tag("rr+frf", 1) == Tag::of(K::Homology, 3));
  CHECK(tag("rr+frf", 2) == Tag::of(K::AugModTensor, 2));
  CHECK(tag("rrf+frr", 1) == Tag::of(K::Homology, 4));
  CHECK(tag("rrf+frr", 2) == Tag::of(K::Homology, 3));
  CHECK(tag("rrr+frrf", 4) == Tag::of(K::AugModTensor, 2));
  CHECK(tag("rrrf+frrr", 4) == Tag::of(K::Homology, 3));
  CHECK(tag("rfr+frr+ffff", 1) == Tag::of(K::TorGab));
  CHECK(tag("fr+rf+fff", 1) == Tag::of(K::GabTensorPower, 2));
  CHECK(tag("r & f^2", 1) == Tag::of(K::AugIdealPower, 2));
  CHECK(tag("r & f^5", 1) == Tag::of(K::AugIdealPower, 5));

  // normalization before matching: rfr is absorbed by rr
  CHECK(tag("frf+rr+rfr", 1) == Tag::of(K::Homology, 3));
  // summand order never matters
  CHECK(tag("ffff+frr+rfr", 1) == Tag::of(K::TorGab));

  // custom rows resolve through the table lookup
  CHECK(tag("rf+ffr", 1) == Tag::of(K::AugPowerModTensor, 2));
  CHECK(tag("rf+ffr+ffff", 1) == Tag::of(K::AugSquareModGabTensor));
  CHECK(tag("rfff+rfr+rrf", 2) == Tag::of(K::AugGabMixedTensor, 1, 2));

  // unknowns stay unknown
  CHECK(tag("rf", 1).is_unknown());
  CHECK(tag("rrff+ffrr", 1).is_unknown());
  // the published row with the duplicated summand does not match the
  // canonical code of its printed translation
  CHECK(tag("rff+frf+rff+ffff", 1).is_unknown());
}

TEST_CASE("evaluate on small groups", "[frcode]") {
  EvalContext z3(cyclic_presentation(3));
  FunctorValue h3 = evaluate(FrCode::parse("rr+frf", 1), z3);
  CHECK(h3.value == oracles::cyclic_homology(3, 3));
  CHECK(!h3.provenance.empty());

  EvalContext s3(symmetric3_presentation());
  CHECK(evaluate(FrCode::parse("r+ff", 1), s3).value == AbGroup::cyclic(2));

  EvalContext z2(cyclic_presentation(2));
  CHECK(evaluate(FrCode::parse("rfr+frr+ffff", 1), z2).value ==
        AbGroup::cyclic(2));
  CHECK(evaluate(FrCode::parse("rr", 2), z2).value == AbGroup::free(1));
  CHECK(evaluate(FrCode::parse("r & f^2", 1), z2).value == AbGroup::free(1));
  CHECK_THROWS_AS(evaluate(FrCode::parse("rf", 1), z2), UnknownCode);
}

TEST_CASE("zg algebra quotients and tensors", "[frcode]") {
  // g/g^2 is the abelianization, both routes
  for (const Presentation& p :
       {cyclic_presentation(2), cyclic_presentation(4),
        klein_four_presentation(), symmetric3_presentation()}) {
    EvalContext ctx(p);
    CHECK(ctx.algebra().aug_quotient(1, 2) == ctx.gab());
  }
  // g/g^3 for Z/2 is Z/4 (filtration 2^k)
  EvalContext z2(cyclic_presentation(2));
  CHECK(z2.algebra().aug_quotient(1, 3) == AbGroup::cyclic(4));

  // bilinear and presented routes for the ZG tensor agree
  for (const Presentation& p :
       {cyclic_presentation(2), cyclic_presentation(3),
        klein_four_presentation(), symmetric3_presentation()}) {
    EvalContext ctx(p);
    CHECK(ctx.algebra().aug_mod_tensor(2) ==
          ctx.algebra().aug_power_mod_tensor_presented(1));
    CHECK(ctx.algebra().aug_power_mod_tensor(2) ==
          ctx.algebra().aug_power_mod_tensor_presented(2));
  }

  // known closed forms: g (x)_ZG g for Z/2 is Z; for the Klein group the
  // extension of g^2 by the Schur multiplier Z/2 splits
  CHECK(z2.algebra().aug_mod_tensor(2) == AbGroup::free(1));
  EvalContext v4(klein_four_presentation());
  CHECK(v4.algebra().aug_mod_tensor(2) == (AbGroup{3, {Int(2)}}));
}

TEST_CASE("evaluate homology codes equals the resolution", "[frcode]") {
  for (const Presentation& p :
       {cyclic_presentation(2), cyclic_presentation(3), cyclic_presentation(4),
        klein_four_presentation()}) {
    EvalContext ctx(p);
    CHECK(evaluate(FrCode::parse("rr+frf", 1), ctx).value == ctx.homology(3));
    CHECK(evaluate(FrCode::parse("rrf+frr", 1), ctx).value == ctx.homology(4));
    CHECK(evaluate(FrCode::parse("rrf+frr", 2), ctx).value == ctx.homology(3));
  }
}

TEST_CASE("L family and tensor rows against exactalg", "[frcode]") {
  for (const Presentation& p :
       {cyclic_presentation(2), cyclic_presentation(4),
        klein_four_presentation(), symmetric3_presentation()}) {
    EvalContext ctx(p);
    AbGroup gab = ctx.gab();
    CHECK(evaluate(FrCode::parse("rr+fff", 1), ctx).value == ab_tor(gab, gab));
    CHECK(evaluate(FrCode::parse("rr+fff", 2), ctx).value ==
          ab_tensor(gab, gab));
    for (long i = 1; i <= 3; ++i)
      CHECK(evaluate(FrCode::parse("rrr+ffff", i), ctx).value ==
            derived_tensor_power(gab, 3, 3 - i));
  }
}

TEST_CASE("verify table on the two smallest groups", "[frcode]") {
  TableReport report =
      verify_table({cyclic_presentation(2), cyclic_presentation(3)});
  CHECK(report.ok());
  CHECK(report.failed == 0);
  CHECK(report.passed > 0);
  CHECK(report.trivial > 0);
  // the duplicated-summand row is flagged exactly once
  REQUIRE(report.findings.size() == 1);
  CHECK(report.findings[0].find("rff+frf+rff+ffff") != std::string::npos);
  // every cell is accounted for: 24 rows x 4 cells x 2 groups + 2x2 chain rows
  CHECK(report.cells.size() == 24 * 4 * 2 + 4);
}

TEST_CASE("game report flags the published discrepancies with evidence",
          "[frcode]") {
  GameReport rep = game_report();
  CHECK(rep.generation2_matches);
  REQUIRE(!rep.findings.empty());
  bool found_col3_gen4 = false;
  for (const auto& f : rep.findings) {
    if (f.column == 3 && f.generation == 4 && f.kind == "extra") {
      found_col3_gen4 = true;
      CHECK(f.evidence.find("candidate confirmed") != std::string::npos);
      CHECK(f.evidence.find("not covered by any published word") !=
            std::string::npos);
    }
  }
  CHECK(found_col3_gen4);
}
