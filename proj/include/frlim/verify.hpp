#pragma once

#include <sstream>

#include "frlim/frcode.hpp"

namespace frlim {

/// One cell of the table verification: a (code, degree, group) triple.
struct CellReport {
  std::string code;
  long lim_degree = 0;
  std::string group;
  std::string expected_tag;
  std::string value;
  std::string provenance;
  std::string status;  // pass | fail | single_path | trivial | not_computable
  std::string note;
};

struct TableReport {
  std::vector<CellReport> cells;
  std::vector<std::string> findings;
  std::size_t passed = 0, failed = 0, single_path = 0, trivial = 0,
              not_computable = 0;

  bool ok() const { return failed == 0; }

  void count(const CellReport& c) {
    if (c.status == "pass")
      ++passed;
    else if (c.status == "fail")
      ++failed;
    else if (c.status == "single_path")
      ++single_path;
    else if (c.status == "trivial")
      ++trivial;
    else
      ++not_computable;
  }
};

namespace detail {

/// Second, independent computation path for a tag, when one exists.
inline std::optional<std::pair<AbGroup, std::string>> cross_path(
    const Tag& tag, EvalContext& ctx) {
  using K = Tag::Kind;
  const EvalOptions& opts = ctx.options();
  switch (tag.kind) {
    case K::Homology: {
      if (tag.n == 0) return {{AbGroup::free(1), "augmentation"}};
      if (tag.n == 1)
        return {{cokernel(ctx.presentation().exponent_matrix()),
                 "cokernel of the relator exponent matrix"}};
      if (tag.n == 2) {
        auto v = ctx.magnus().stabilized_generation_quotient(
            {"r", "ff"}, {"rf", "fr"}, opts.h2_degrees);
        if (v) return {{*v, "stabilized truncation quotient (r&ff)/(rf+fr)"}};
        return std::nullopt;
      }
      if (tag.n == 3) {
        auto v = ctx.magnus().stabilized_generation_quotient(
            {"rf", "fr"}, {"rr", "frf"}, opts.h3_degrees);
        if (v) return {{*v, "stabilized truncation quotient (rf&fr)/(rr+frf)"}};
        return std::nullopt;
      }
      return std::nullopt;
    }
    case K::AugIdealTensorPower: {
      std::size_t r = 1;
      for (long k = 0; k < tag.n; ++k) r *= ctx.algebra().order() - 1;
      return {{AbGroup::free(r), "rank arithmetic (|G|-1)^n"}};
    }
    case K::GabTensorPower:
      return {{detail::tensor_power(ctx.homology(1), tag.n),
               "H_1 from the resolution, tensored"}};
    case K::DerivedTensor:
      return {{detail::derived_power_kuenneth(ctx.gab(), tag.n, tag.i),
               "Kuenneth recursion from tensor/Tor"}};
    case K::TorGab:
      return {{detail::tor_structural(
                   detail::tensor_structural(ctx.gab(), ctx.gab()), ctx.gab()),
               "structural gcd formulas"}};
    case K::AugModTensor:
      if (tag.n == 2)
        return {{ctx.algebra().aug_power_mod_tensor_presented(1),
                 "free presentation of g and right-exactness"}};
      return std::nullopt;
    case K::AugPowerModTensor:
      return {{ctx.algebra().aug_power_mod_tensor_presented(tag.n),
               "free presentation of g^p and right-exactness"}};
    case K::AugQuotient: {
      // I/I^n = f/(r + f^n) computed in the truncation, stabilized
      std::vector<std::size_t> ds;
      for (std::size_t off : opts.quotient_extra)
        ds.push_back(static_cast<std::size_t>(tag.n) + 1 + off);
      std::vector<AbGroup> vals;
      for (std::size_t d : ds)
        vals.push_back(ctx.magnus().generation_quotient(
            {"f"}, {"r", FrWord(tag.n, 'f')}, d));
      for (std::size_t k = 2; k < vals.size(); ++k)
        if (vals[k] == vals[k - 1] && vals[k - 1] == vals[k - 2])
          return {{vals[k], "stabilized truncation quotient f/(r+f^n)"}};
      return std::nullopt;
    }
    case K::AugSquareModGabTensor: {
      // g^2/g^3 = f^2/(f^3 + (r & f^2)) in the truncation, then (x) Gab
      std::vector<AbGroup> vals;
      for (std::size_t d : {4u, 5u, 6u}) {
        const TruncRing& ring = ctx.magnus().ring(d);
        IdealLattice a = ctx.magnus().fr_ideal("ff", d);
        IdealLattice rcapf2 = lattice_intersect(
            ring, ctx.magnus().fr_ideal("r", d), ctx.magnus().fr_ideal("ff", d));
        IdealLattice b =
            lattice_sum(ring, ctx.magnus().fr_ideal("fff", d), rcapf2);
        vals.push_back(quotient_abgroup(a, b));
      }
      for (std::size_t k = 2; k < vals.size(); ++k)
        if (vals[k] == vals[k - 1] && vals[k - 1] == vals[k - 2])
          return {{ab_tensor(vals[k], ctx.gab()),
                   "stabilized truncation quotient f^2/(f^3 + r&f^2), tensored"}};
      return std::nullopt;
    }
    case K::AugGabMixedTensor: {
      AbGroup g = AbGroup::free(ctx.algebra().order() - 1);
      return {{ab_tensor(detail::tensor_power(g, tag.n),
                         detail::tensor_power(ctx.homology(1), tag.i)),
               "H_1 route for Gab with rank arithmetic for g"}};
    }
    default:
      return std::nullopt;
  }
}

}  // namespace detail

/// Evaluates every table cell for every group, comparing against an
/// independent second path where one exists; also checks each row's printed
/// code against the canonical code of its published tags and runs the
/// homology-from-generations identity for the (r, ff) chain.
inline TableReport verify_table(const std::vector<Presentation>& groups,
                                const EvalOptions& opts = {}) {
  TableReport report;

  // row-text consistency findings (group independent)
  for (const TableEntry& row : builtin_table()) {
    FrSentence s = normalize(expand_to_sentence(*parse_fr_expr(row.code)));
    for (long i = 1; i <= 4; ++i) {
      const Tag& published = row.tags[i - 1];
      if (published.is_zero() || !is_family_kind(published.kind)) continue;
      Tag seen = detail::recognize_families(s, i);
      if (seen != published) {
        std::ostringstream os;
        os << "row \"" << row.code << "\" lim^" << i
           << ": printed code does not match the canonical code of its "
              "published translation "
           << published.to_string()
           << " (recognized: " << seen.to_string() << ")";
        report.findings.push_back(os.str());
      }
    }
  }

  for (const Presentation& p : groups) {
    EvalContext ctx(p, opts);
    std::string gname = p.describe();
    // one resolution build at the highest degree any homology cell needs
    long max_h = 0;
    for (const TableEntry& row : builtin_table())
      for (const Tag& t : row.tags)
        if (t.kind == Tag::Kind::Homology) max_h = std::max(max_h, t.n);
    if (max_h > 0) ctx.reserve_homology_degree(max_h);

    for (const TableEntry& row : builtin_table()) {
      for (long i = 1; i <= 4; ++i) {
        const Tag& tag = row.tags[i - 1];
        CellReport cell;
        cell.code = row.code;
        cell.lim_degree = i;
        cell.group = gname;
        cell.expected_tag = tag.to_string();
        if (tag.is_zero()) {
          cell.value = "0";
          cell.provenance = "vanishing family";
          cell.status = "trivial";
          report.count(cell);
          report.cells.push_back(std::move(cell));
          continue;
        }
        try {
          FunctorValue fv = evaluate_tag(tag, ctx);
          cell.value = fv.value.to_string();
          cell.provenance = fv.provenance;
          auto second = detail::cross_path(tag, ctx);
          if (!second) {
            cell.status = "single_path";
            cell.note = "no independent desk-scale route for this tag";
          } else if (second->first == fv.value) {
            cell.status = "pass";
            cell.note = "agrees with " + second->second;
          } else {
            cell.status = "fail";
            cell.note = "mismatch against " + second->second + ": " +
                        second->first.to_string();
          }
        } catch (const Error& err) {
          cell.status = "not_computable";
          cell.note = err.what();
        }
        report.count(cell);
        report.cells.push_back(std::move(cell));
      }
    }

    // homology-from-generations identity on the (r, ff) chain
    for (long n : {2L, 3L}) {
      CellReport cell;
      cell.code = "(r,ff) chain";
      cell.lim_degree = n - 1;  // generation index i with H_{i+1}
      cell.group = gname;
      cell.expected_tag = "H_" + std::to_string(n) + "(G)";
      try {
        AbGroup h = ctx.homology(n);
        auto v = n == 2 ? ctx.magnus().stabilized_generation_quotient(
                              {"r", "ff"}, {"rf", "fr"}, opts.h2_degrees)
                        : ctx.magnus().stabilized_generation_quotient(
                              {"rf", "fr"}, {"rr", "frf"}, opts.h3_degrees);
        if (!v) {
          cell.status = "not_computable";
          cell.note = "no stabilization within the configured degrees";
        } else {
          cell.value = v->to_string();
          cell.provenance = "stabilized truncation quotient vs resolution";
          cell.status = (*v == h) ? "pass" : "fail";
          if (cell.status == "fail")
            cell.note = "resolution gives " + h.to_string();
        }
      } catch (const Error& err) {
        cell.status = "not_computable";
        cell.note = err.what();
      }
      report.count(cell);
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

/// Game recomputation report with truncation evidence for every discrepancy
/// against the published rows (criterion: evidence at N <= 7 over <x,y|x^2>).
struct GameFinding {
  std::size_t column = 0, generation = 0;
  FrWord word;
  std::string kind;  // "extra" (recomputed, not published) or "missing"
  std::string evidence;
};

struct GameReport {
  std::vector<GenerationDiff> diffs;  // all columns concatenated
  std::vector<GameFinding> findings;
  bool generation2_matches = true;
};

inline GameReport game_report(std::size_t evidence_degree = 7) {
  GameReport out;
  Presentation ground({"x", "y"}, {"x^2"});
  MagnusContext oracle(ground);
  // containment evidence at the truncation; words at least as long as the
  // degree have zero image, so the check would be vacuous there
  auto checked = [&](const FrWord& w, const FrWord& v) -> std::optional<bool> {
    if (w.size() >= evidence_degree || v.size() >= evidence_degree)
      return std::nullopt;
    return oracle.ideal_contained(w, v, evidence_degree);
  };
  auto describe = [&](std::ostringstream& ev, const FrWord& w, const FrWord& v,
                      std::optional<bool> r) {
    if (!r)
      ev << w << " vs " << v << ": vacuous at N<=" << evidence_degree << "; ";
    else
      ev << w << (*r ? " <= " : " !<= ") << v << " at N<=" << evidence_degree
         << "; ";
  };

  auto cols = published_game_tables();
  for (std::size_t c = 0; c < cols.size(); ++c) {
    auto diffs = compare_with_published(cols[c]);
    std::vector<FrSentence> ours = game(cols[c].origin, 5);
    if (!diffs[0].agrees()) out.generation2_matches = false;
    for (const auto& d : diffs) {
      for (const FrWord& w : d.extra) {
        GameFinding f{c + 1, d.generation, w, "extra", ""};
        // evidence: w lies in every ideal of the previous recomputed
        // generation, and is not inside any published word of this one
        std::ostringstream ev;
        bool in_all = true;
        for (const FrWord& a : ours[d.generation - 2]) {
          auto r = checked(w, a);
          in_all = in_all && r.value_or(true);
          describe(ev, w, a, r);
        }
        bool covered = false;
        for (const FrWord& v : d.published) {
          auto r = checked(w, v);
          covered = covered || r.value_or(false);
          describe(ev, w, v, r);
        }
        ev << (in_all ? "candidate confirmed" : "candidate NOT confirmed");
        ev << (covered ? "; covered by a published word"
                       : "; not covered by any published word");
        f.evidence = ev.str();
        out.findings.push_back(std::move(f));
      }
      for (const FrWord& w : d.missing) {
        GameFinding f{c + 1, d.generation, w, "missing", ""};
        std::ostringstream ev;
        bool covered = false;
        for (const FrWord& v : d.computed) {
          if (!word_contains(w, v)) continue;
          auto r = checked(w, v);
          describe(ev, w, v, r);
          covered = covered || r.value_or(true);
        }
        bool in_all = true;
        for (const FrWord& a : ours[d.generation - 2])
          in_all = in_all && checked(w, a).value_or(true);
        if (covered)
          ev << "published word is dominated by a recomputed one";
        else if (!in_all)
          ev << "published word is not a candidate against the recomputed "
                "previous generation";
        f.evidence = ev.str();
        out.findings.push_back(std::move(f));
      }
      out.diffs.push_back(d);
    }
  }
  return out;
}

}  // namespace frlim
