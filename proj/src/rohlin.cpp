#include "trisect/rohlin.hpp"

#include "trisect/forms.hpp"

#include <algorithm>
#include <numeric>

namespace trisect {

int base_mu_sum(const IntMatrix& q) {
  if (!is_even(q)) throw Error(ErrorKind::OddForm, "form has an odd diagonal entry");
  const long m = signature(q) / 8;
  return int(((m % 2) + 2) % 2);
}

RegluingContext prepare_regluing(const PseudotrisectionDiagram& d) {
  RegluingContext ctx;
  ctx.form = intersection_form(d).matrix;
  if (!is_even(ctx.form)) throw Error(ErrorKind::OddForm, "regluing needs an even intersection form");
  ctx.base_mu = base_mu_sum(ctx.form);
  ctx.q2 = enhancement(linking_form(d, LinkingKind::L2));
  ctx.q3 = enhancement(linking_form(d, LinkingKind::L3));
  return ctx;
}

MuLedger apply_regluing(const RegluingContext& ctx, const RegluingScript& s) {
  MuLedger ledger;
  for (const auto& twist : s.twists) {
    int a2 = arf_invariant(ctx.q2, twist);
    int a3 = arf_invariant(ctx.q3, twist);
    ledger.per_twist.emplace_back(a2, a3);
    ledger.mu2_delta ^= a2;
    ledger.mu3_delta ^= a3;
  }
  return ledger;
}

MuLedger apply_regluing(const PseudotrisectionDiagram& d, const RegluingScript& s) {
  return apply_regluing(prepare_regluing(d), s);
}

int mu_sum_after(const RegluingContext& ctx, const RegluingScript& s) {
  MuLedger ledger = apply_regluing(ctx, s);
  return ctx.base_mu ^ ledger.mu2_delta ^ ledger.mu3_delta;
}

int mu_sum_after(const PseudotrisectionDiagram& d, const RegluingScript& s) { return mu_sum_after(prepare_regluing(d), s); }

RegluingScript random_script(Index genus, Index twists, std::mt19937_64& rng) {
  RegluingScript script;
  if (genus == 0) return script;
  SymplecticLattice lat{genus};
  std::uniform_int_distribution<Index> size_dist(1, genus);
  std::uniform_int_distribution<Index> coord(0, 2 * genus - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  std::uniform_int_distribution<Index> moves(genus, 2 * genus);
  std::vector<Index> handles(std::size_t(genus), 0);
  std::iota(handles.begin(), handles.end(), Index(0));

  for (Index t = 0; t < twists; ++t) {
    const Index h = size_dist(rng);
    std::shuffle(handles.begin(), handles.end(), rng);
    IntMatrix side(2 * h, 2 * genus);
    for (Index i = 0; i < h; ++i) {
      side.row(2 * i) = basis_x(genus, handles[std::size_t(i)]);
      side.row(2 * i + 1) = basis_y(genus, handles[std::size_t(i)]);
    }
    // T_v(w) = w + <w, v> v preserves the pairing; v = e_a +- e_b keeps the
    // entries small.
    const Index count = moves(rng);
    for (Index m = 0; m < count; ++m) {
      IntRow v = IntRow::Zero(2 * genus);
      const Index a = coord(rng), b = coord(rng);
      v(a) += 1;
      v(b) += sign(rng) ? 1 : -1;
      for (Index r = 0; r < side.rows(); ++r) {
        BigInt p = intersection_pairing(lat, side.row(r), v);
        if (p != 0) side.row(r) += p * v;
      }
    }
    script.twists.push_back(separating_class_subsurface(genus, side));
  }
  return script;
}

const char* to_string(Verdict v) { return v == Verdict::Obstructed ? "Obstructed" : "Consistent"; }

ObstructionReport rohlin_obstruction(const IntMatrix& q, const std::string& label) {
  if (q.rows() != q.cols()) throw Error(ErrorKind::NotSquare, "form must be square");
  if (q != q.transpose()) throw Error(ErrorKind::NotSymmetric, "form must be symmetric");
  if (!is_unimodular(q)) throw Error(ErrorKind::NotUnimodular, "form must be unimodular");
  ObstructionReport r;
  r.form_label = label;
  r.matrix = q;
  r.signature = signature(q);
  r.signature_mod16 = ((r.signature % 16) + 16) % 16;
  r.even = is_even(q);
  if (r.even) {
    r.mu_sum = base_mu_sum(q);
    r.verdict = *r.mu_sum == 1 ? Verdict::Obstructed : Verdict::Consistent;
  }
  return r;
}

}  // namespace trisect
