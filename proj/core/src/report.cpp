#include <json.hpp>
#include <sstream>

#include "flagchow/classify.hpp"

namespace flagchow {

namespace {

void compositions_rec(int remaining, int parts, std::vector<int>& current,
                      std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    if (remaining >= 1) {
      current.push_back(remaining);
      out.push_back(current);
      current.pop_back();
    }
    return;
  }
  for (int first = 1; first + parts - 1 <= remaining; ++first) {
    current.push_back(first);
    compositions_rec(remaining - first, parts - 1, current, out);
    current.pop_back();
  }
}

// Catalog families with representative small twists, per regime.
std::vector<BundlePtr> family_catalog(int d, int n) {
  Regime regime = regime_of(d, n);
  std::vector<BundlePtr> families;

  // Sums of line bundles with consecutive twists.
  for (int k = 1; k <= d + 1; ++k) {
    std::vector<std::vector<int>> comps;
    std::vector<int> current;
    compositions_rec(d + 1, k, current, comps);
    for (const auto& r : comps) {
      BundlePtr family;
      for (int i = 0; i < k; ++i) {
        for (int copy = 0; copy < r[i]; ++copy) {
          BundlePtr line = BundleExpr::line(k - 1 - i);
          family = family ? BundleExpr::sum(family, line) : line;
        }
      }
      families.push_back(family);
    }
  }

  // H*(c) + O(b) and H(a) + O(b) with every consecutive-type gap.
  BundlePtr h = BundleExpr::sub();
  BundlePtr h_dual = BundleExpr::dual(BundleExpr::sub());
  for (int b : {-1, 0, 1, 2}) {
    families.push_back(BundleExpr::sum(h_dual, BundleExpr::line(b)));
  }
  families.push_back(BundleExpr::sum(BundleExpr::twist(h_dual, 1),
                                     BundleExpr::line(2)));
  for (int b : {1, 0, -1, -2}) {
    families.push_back(BundleExpr::sum(h, BundleExpr::line(b)));
  }
  families.push_back(
      BundleExpr::sum(BundleExpr::twist(h, -1), BundleExpr::line(-2)));

  if (d == 2) {
    families.push_back(BundleExpr::twist(BundleExpr::sym2(h), 2));
    families.push_back(BundleExpr::sym2(h));
  }

  if (regime == Regime::Boundary) {
    BundlePtr q = BundleExpr::quot();
    families.push_back(q);
    families.push_back(BundleExpr::twist(q, 1));
    families.push_back(BundleExpr::dual(q));
    families.push_back(BundleExpr::twist(BundleExpr::dual(q), 1));
  }

  if (regime == Regime::Equal) {
    BundlePtr q = BundleExpr::quot();
    families.push_back(BundleExpr::sum(BundleExpr::line(1), q));
    families.push_back(BundleExpr::sum(BundleExpr::line(0), q));
    families.push_back(BundleExpr::sum(BundleExpr::line(2), q));
    families.push_back(
        BundleExpr::sum(BundleExpr::line(0), BundleExpr::twist(q, 1)));
    families.push_back(
        BundleExpr::sum(BundleExpr::line(0), BundleExpr::dual(q)));
    if (d == 2) {
      families.push_back(BundleExpr::twist(BundleExpr::sym2(q), 2));
      families.push_back(BundleExpr::twist(BundleExpr::sym2(q), 1));
    }
  }

  return families;
}

}  // namespace

std::vector<std::string> TheoremReport::matched_case_labels() const {
  std::vector<std::string> labels;
  for (const auto& entry : entries) {
    if (entry.verified) labels.push_back(entry.case_id);
  }
  return labels;
}

TheoremReport classify_theorem(int d, int n) {
  TheoremReport report;
  report.d = d;
  report.n = n;
  report.regime = regime_name(regime_of(d, n));

  for (const auto& family : family_catalog(d, n)) {
    ReportEntry entry;
    entry.family = family->str();
    entry.regime = report.regime;
    try {
      entry.type = splitting_type(*family, d, n);
      if (!consecutive_gap_reduction(entry.type)) {
        entry.note = "reducible: non-consecutive splitting exponents";
        report.diagnostics.push_back(entry.family + ": " + entry.note);
        report.entries.push_back(entry);
        continue;
      }
      ChernPolynomial c = chern_pullback(*family, d, n);
      auto match = match_case(c, d, n);
      if (!match) {
        entry.note = "no normal-form case matches";
        report.diagnostics.push_back(entry.family + ": " + entry.note);
      } else {
        entry.case_id = match->matched.label;
        entry.transform = match->transform;
        entry.verified = true;
        if (!match->matched.family_note.empty()) {
          entry.note = match->matched.family_note;
        }
      }
    } catch (const AmbiguousMatch& ambiguous) {
      entry.note = ambiguous.what();
      report.diagnostics.push_back(entry.family + ": " + entry.note);
    }
    report.entries.push_back(entry);
  }

  report.all_verified = report.diagnostics.empty();
  for (const auto& entry : report.entries) {
    if (!entry.verified) report.all_verified = false;
  }
  return report;
}

std::string TheoremReport::text() const {
  std::ostringstream out;
  out << "classification report for G(" << d << "," << n << "), regime "
      << regime << "\n";
  for (const auto& entry : entries) {
    out << (entry.verified ? "  ok   " : "  FAIL ") << entry.family << "  "
        << entry.type.str() << "  -> case " << (entry.case_id.empty() ? "-" : entry.case_id)
        << "  [twist " << entry.transform.twist
        << (entry.transform.dualized ? ", dual" : "") << "]";
    if (!entry.note.empty()) out << "  (" << entry.note << ")";
    out << "\n";
  }
  out << (all_verified ? "all families verified\n"
                       : "verification FAILED\n");
  return out.str();
}

std::string TheoremReport::json() const {
  nlohmann::json array = nlohmann::json::array();
  for (const auto& entry : entries) {
    nlohmann::json record;
    record["family"] = entry.family;
    record["splitting_type"] = {{"u", entry.type.u}, {"r", entry.type.r}};
    record["regime"] = entry.regime;
    record["case_id"] = entry.case_id;
    record["transform"] = {{"twist", entry.transform.twist},
                           {"dualized", entry.transform.dualized}};
    record["verified"] = entry.verified;
    if (!entry.note.empty()) record["note"] = entry.note;
    array.push_back(record);
  }
  return array.dump(2);
}

}  // namespace flagchow
