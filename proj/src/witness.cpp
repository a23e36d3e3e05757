// Copyright 2026 The growthlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "growthlab/witness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "growthlab/alexander.hpp"
#include "growthlab/errors.hpp"
#include "growthlab/exact_linalg.hpp"
#include "growthlab/stallings.hpp"

namespace growthlab {

double combined_bound(double u, BoundBranch branch, unsigned d) {
  if (!(u > 1.0)) throw Error(ErrorCode::kPrecondition, "u must exceed 1");
  switch (branch) {
    case BoundBranch::kPairInKernel:
      return std::pow(u, 1.0 / 4.0);
    case BoundBranch::kConjugatePair:
      return std::pow(u, 1.0 / 6.0);
    case BoundBranch::kInfiniteKernel:
      return std::pow(2.0, 1.0 / 16.0);
    case BoundBranch::kKernelChain:
      return std::pow(u, 1.0 / (2.0 * d + 4.0));
  }
  return 1.0;
}

std::vector<Word> commutator_candidates(const GroupEngine& engine, const std::vector<Word>& gens) {
  std::vector<Word> out;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    for (std::size_t k = j + 1; k < gens.size(); ++k) {
      for (int e : {1, -1}) {
        for (int f : {1, -1}) {
          Word a = e > 0 ? gens[j] : gens[j].inverse();
          Word b = f > 0 ? gens[k] : gens[k].inverse();
          Word c = commutator(a, b);
          if (!engine.is_identity(engine.evaluate(c))) out.push_back(std::move(c));
        }
      }
    }
  }
  return out;
}

const char* certificate_kind_name(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::kNonCyclicPair: return "NonCyclicPair";
    case CertificateKind::kKernelChainEscape: return "KernelChainEscape";
    case CertificateKind::kSpectralExponential: return "SpectralExponential";
    case CertificateKind::kPeriodicConjugacy: return "PeriodicConjugacy";
    case CertificateKind::kVirtuallyNilpotentDiagnosis: return "VirtuallyNilpotentDiagnosis";
    case CertificateKind::kInconclusive: return "Inconclusive";
  }
  return "?";
}

Word expand_in_gens(const Word& expression, const std::vector<Word>& gens) {
  Word out;
  for (const auto& letter : expression.letters()) {
    if (letter.name.size() < 2 || letter.name[0] != 'a') {
      throw Error(ErrorCode::kUnknownGenerator, "expected a generator symbol a<i>, got '" + letter.name + "'");
    }
    const std::size_t i = std::stoul(letter.name.substr(1));
    if (i == 0 || i > gens.size()) {
      throw Error(ErrorCode::kUnknownGenerator, "generator symbol out of range: " + letter.name);
    }
    const Word& g = letter.exponent > 0 ? gens[i - 1] : gens[i - 1].inverse();
    for (std::int64_t r = 0; r < std::abs(letter.exponent); ++r) out.append(g);
  }
  return out;
}

namespace {

Word symbol(std::size_t i, std::int64_t e = 1) { return Word::letter("a" + std::to_string(i + 1), e); }

Word commutator_expr(std::size_t j, std::size_t k) { return commutator(symbol(j), symbol(k)); }

// a_i^s * inner * a_i^-s
Word conjugate_expr(std::size_t i, std::int64_t s, const Word& inner) {
  if (s == 0) return inner;
  return symbol(i, s) * inner * symbol(i, -s);
}

enum class PairStatus { kSmall, kNotSmall, kUndecided };

struct PairVerdict {
  PairStatus status;
  std::string note;
};

// "Small" pairs generate Z or, when d >= 2, a commuting Z^2. Only free and free
// abelian bases turn a non-small pair into a certificate; elsewhere the
// verdict is a diagnostic.
PairVerdict classify_pair(const GroupEngine& base, const Element& p, const Element& q, unsigned d) {
  try {
    if (is_cyclic_pair(base, p, q)) return {PairStatus::kSmall, ""};
  } catch (const Error& e) {
    return {PairStatus::kUndecided, e.what()};
  }
  const bool comm = base.commute(p, q);
  if (comm && d >= 2) return {PairStatus::kSmall, ""};
  switch (base.family()) {
    case Family::kFree:
    case Family::kAbelian:
      return {PairStatus::kNotSmall, ""};
    case Family::kKlein: {
      if (comm) return {PairStatus::kUndecided, "Z^2 pair in a virtually abelian base"};
      const bool squares = base.equal(base.multiply(p, p), base.multiply(q, q));
      return {PairStatus::kUndecided, squares ? "KleinBottleSuspect (x0^2 = x1^2)"
                                              : "non-abelian pair in a virtually abelian base"};
    }
    default:
      return {PairStatus::kUndecided, std::string("non-cyclic pair in unsupported base ") + base.id()};
  }
}

// Coordinates of pairwise commuting base elements under an injective
// homomorphism from the abelian group they generate into Z^r.
std::optional<std::vector<IntegerVector>> abelian_coordinates(const GroupEngine& base,
                                                              const std::vector<Element>& xs,
                                                              std::string& why) {
  std::vector<IntegerVector> out;
  switch (base.family()) {
    case Family::kAbelian:
      for (const auto& x : xs) out.push_back(x.as<AbelianElement>().coords);
      return out;
    case Family::kFree: {
      // All lie in the cyclic group of the primitive root of xs[0].
      const auto& letters = xs[0].as<FreeElement>().letters;
      auto dec = free_words::cyclic_decomposition(letters);
      const std::size_t period = free_words::primitive_period(dec.core);
      std::vector<int> root_letters = dec.prefix;
      root_letters.insert(root_letters.end(), dec.core.begin(), dec.core.begin() + period);
      auto inv_prefix = free_words::inverse(dec.prefix);
      root_letters.insert(root_letters.end(), inv_prefix.begin(), inv_prefix.end());
      const Element root = FreeEngine::from_letters(free_words::reduce(root_letters));
      for (const auto& x : xs) {
        auto d = free_words::cyclic_decomposition(x.as<FreeElement>().letters);
        long e = static_cast<long>(d.core.size() / period);
        if (base.equal(base.power(root, Integer(e)), x)) {
          out.push_back(IntegerVector::Constant(1, Integer(e)));
        } else if (base.equal(base.power(root, Integer(-e)), x)) {
          out.push_back(IntegerVector::Constant(1, Integer(-e)));
        } else {
          why = "commuting free elements without a common root";
          return std::nullopt;
        }
      }
      return out;
    }
    case Family::kKlein: {
      bool all_even = true;
      for (const auto& x : xs) all_even = all_even && mpz_even_p(x.as<KleinElement>().t_exp.get_mpz_t());
      for (const auto& x : xs) {
        const auto& k = x.as<KleinElement>();
        if (all_even) {
          IntegerVector v(2);
          v << k.a_exp, Integer(k.t_exp / 2);
          out.push_back(v);
        } else {
          // Inside the infinite cyclic centralizer of an odd element the
          // t-exponent is injective.
          out.push_back(IntegerVector::Constant(1, k.t_exp));
        }
      }
      return out;
    }
    case Family::kBS1: {
      std::uint64_t top = 0;
      for (const auto& x : xs) {
        const auto& b = x.as<BS1Element>();
        if (b.shift != 0) {
          why = "BS(1,m) chain leaves Z[1/m]";
          return std::nullopt;
        }
        top = std::max(top, b.e);
      }
      const Integer m = static_cast<const BS1Engine&>(base).m();
      for (const auto& x : xs) {
        const auto& b = x.as<BS1Element>();
        out.push_back(IntegerVector::Constant(1, Integer(b.num * ipow(m, top - b.e))));
      }
      return out;
    }
    default:
      why = std::string("no abelian coordinates for base ") + base.id();
      return std::nullopt;
  }
}

IntegerMatrix companion(const std::vector<Integer>& monic_low_to_high) {
  const std::size_t s = monic_low_to_high.size() - 1;
  IntegerMatrix n = IntegerMatrix::Zero(s, s);
  for (std::size_t j = 0; j + 1 < s; ++j) n(j + 1, j) = 1;
  for (std::size_t i = 0; i < s; ++i) n(i, s - 1) = -monic_low_to_high[i];
  return n;
}

// Smallest q with m^q >= 2, then 2^(1/(4(q+1))): the words
// c^e0 a^q c^e1 a^q ... c^e(n-1) a^q with e_k in {0,1} are pairwise distinct.
double spectral_bound(double m_lower) {
  long q = static_cast<long>(std::ceil(std::log(2.0) / std::log(m_lower)));
  q = std::max(q, 1L);
  while (std::pow(static_cast<long double>(m_lower), q) < 2.0L) ++q;
  return std::pow(2.0, 1.0 / (4.0 * (q + 1)));
}

struct CaseOutcome {
  std::optional<Certificate> cert;
  std::vector<std::string> diagnostics;
};

class Analyzer {
 public:
  Analyzer(const SemidirectEngine& group, const std::vector<Word>& gens, double u, unsigned d)
      : group_(group), base_(group.base()), gens_(gens), u_(u), d_(d) {
    for (const auto& g : gens) elems_.push_back(group.evaluate(g));
  }

  const std::vector<Element>& elements() const { return elems_; }

  Certificate blank() const {
    Certificate c;
    c.generators = gens_;
    c.d = d_;
    c.u_param = u_;
    return c;
  }

  CaseOutcome run_case(std::size_t i, std::size_t j, std::size_t k, const Element& comm) const {
    CaseOutcome out;
    auto note = [&](const std::string& text) {
      std::ostringstream s;
      s << "case (" << i + 1 << "," << j + 1 << "," << k + 1 << "): " << text;
      out.diagnostics.push_back(s.str());
    };
    const Element x0 = SemidirectEngine::base_component(comm);
    const Element& ai = elems_[i];
    const std::int64_t shift = SemidirectEngine::shift(ai);
    const Word c_expr = commutator_expr(j, k);

    if (shift == 0) {
      const Element a = SemidirectEngine::base_component(ai);
      PairVerdict v = classify_pair(base_, a, x0, d_);
      if (v.status == PairStatus::kNotSmall) {
        Certificate cert = blank();
        cert.kind = CertificateKind::kNonCyclicPair;
        cert.case_index = {i, j, k};
        cert.u = base_.to_word(a);
        cert.v = base_.to_word(x0);
        cert.u_in_gens = symbol(i);
        cert.v_in_gens = c_expr;
        cert.max_gen_length = 4;
        cert.bound = combined_bound(u_, BoundBranch::kPairInKernel, d_);
        cert.reason = "a_i lies in the kernel and <a_i, [a_j,a_k]> is not small";
        out.cert = std::move(cert);
      } else if (v.status == PairStatus::kUndecided) {
        note(v.note);
      }
      return out;
    }

    const Element ai_inv = group_.invert(ai);
    auto conj = [&](const Element& by, const Element& x) {
      return SemidirectEngine::base_component(group_.conjugate(by, group_.lift(x)));
    };
    const Element x_plus = conj(ai, x0);
    const Element x_minus = conj(ai_inv, x0);
    for (int sgn : {1, -1}) {
      const Element& other = sgn > 0 ? x_plus : x_minus;
      PairVerdict v = classify_pair(base_, x0, other, d_);
      if (v.status == PairStatus::kNotSmall) {
        Certificate cert = blank();
        cert.kind = CertificateKind::kNonCyclicPair;
        cert.case_index = {i, j, k};
        cert.u = base_.to_word(x0);
        cert.v = base_.to_word(other);
        cert.u_in_gens = c_expr;
        cert.v_in_gens = conjugate_expr(i, sgn, c_expr);
        cert.max_gen_length = 6;
        cert.bound = combined_bound(u_, BoundBranch::kConjugatePair, d_);
        cert.reason = sgn > 0 ? "L_{+1} = <x_0, x_1> is not small" : "L_{-1} = <x_0, x_{-1}> is not small";
        out.cert = std::move(cert);
        return out;
      }
      if (v.status == PairStatus::kUndecided) {
        note(v.note);
        return out;
      }
    }
    chain(i, j, k, ai, x0, c_expr, out, note);
    return out;
  }

 private:
  template <typename Note>
  void chain(std::size_t i, std::size_t j, std::size_t k, const Element& ai, const Element& x0,
             const Word& c_expr, CaseOutcome& out, Note& note) const {
    // x_s = a_i^s x_0 a_i^-s for s = 0..d+1.
    std::vector<Element> xs{x0};
    for (unsigned s = 1; s <= d_ + 1; ++s) {
      xs.push_back(SemidirectEngine::base_component(group_.conjugate(ai, group_.lift(xs.back()))));
      for (unsigned p = 0; p < s; ++p) {
        if (base_.commute(xs[p], xs[s])) continue;
        if (s <= d_ && base_.family() == Family::kFree) {
          Certificate cert = blank();
          cert.kind = CertificateKind::kKernelChainEscape;
          cert.case_index = {i, j, k};
          cert.depth = s;
          cert.u = base_.to_word(xs[p]);
          cert.v = base_.to_word(xs[s]);
          cert.u_in_gens = conjugate_expr(i, p, c_expr);
          cert.v_in_gens = conjugate_expr(i, s, c_expr);
          cert.max_gen_length = 4 + 2 * s;
          cert.bound = combined_bound(u_, BoundBranch::kKernelChain, d_);
          cert.reason = "L_" + std::to_string(s) + " is non-abelian";
          out.cert = std::move(cert);
        } else {
          note("chain L_" + std::to_string(s) + " is non-abelian but no certificate applies in base " +
               base_.id());
        }
        return;
      }
    }
    std::string why;
    auto coords = abelian_coordinates(base_, xs, why);
    if (!coords) {
      note(why);
      return;
    }
    const Eigen::Index dim = (*coords)[0].size();
    std::size_t stick = 0;
    std::vector<IntegerVector> kernel;
    for (std::size_t s = 1; s < xs.size() && stick == 0; ++s) {
      IntegerMatrix m(dim, s + 1);
      for (std::size_t c = 0; c <= s; ++c) m.col(c) = (*coords)[c];
      if (exact_rank(m) <= static_cast<Eigen::Index>(s)) {
        stick = s;
        kernel = integer_nullspace(m);
      }
    }
    if (stick == 0) {
      note("chain rank keeps growing through depth " + std::to_string(d_ + 1) +
           "; infinite-kernel branch bound " + std::to_string(combined_bound(2.0, BoundBranch::kInfiniteKernel)) +
           " is not certified");
      return;
    }
    std::vector<Integer> rel(kernel.front().data(), kernel.front().data() + kernel.front().size());
    if (rel.back() < 0) {
      for (auto& c : rel) c = -c;
    }
    std::map<std::int64_t, Integer> terms;
    for (std::size_t t = 0; t < rel.size(); ++t) terms[static_cast<std::int64_t>(t)] = rel[t];
    const LaurentPoly rel_poly(terms);
    if (abs(rel.back()) != 1 || abs(rel.front()) != 1) {
      std::string label;
      if (stick == 1 && rel[0] != 0 && abs(rel[1]) != 1) {
        try {
          label = sticking_contradiction(rel[0], rel[1], rel_poly).label;
        } catch (const Error& e) {
          label = e.what();
        }
      } else {
        label = kernel_verdict_name(fg_kernel_obstruction(rel_poly));
      }
      note("chain sticks at depth " + std::to_string(stick) + " with relation " + rel_poly.to_string() +
           " (" + label + "); the kernel of <a_i, c> is not finitely generated, infinite-kernel "
           "branch bound " + std::to_string(combined_bound(2.0, BoundBranch::kInfiniteKernel)) +
           " is not certified");
      return;
    }

    // Both ends are units: <x_0..x_{s-1}> is a lattice invariant under
    // conjugation by a_i, acting by the companion matrix of the relation.
    std::vector<Integer> monic = rel;
    if (monic.back() < 0) {
      for (auto& c : monic) c = -c;
    }
    const IntegerMatrix action = companion(monic);
    Classification cls;
    try {
      cls = classify_abelian_by_cyclic(action);
    } catch (const Error& e) {
      note(std::string("spectral classification failed: ") + e.what());
      return;
    }
    if (cls.kind == GrowthClass::kExponential) {
      Certificate cert = blank();
      cert.kind = CertificateKind::kSpectralExponential;
      cert.case_index = {i, j, k};
      cert.depth = stick;
      cert.u = base_.to_word(x0);
      cert.v = group_.to_word(ai);
      cert.u_in_gens = c_expr;
      cert.v_in_gens = symbol(i);
      cert.max_gen_length = 4;
      cert.matrix = action;
      cert.relation = rel;
      cert.radius = cls.radius;
      cert.bound = spectral_bound(cls.radius.lower);
      cert.reason = "a_i acts on the lattice of conjugates of [a_j,a_k] with spectral radius > 1";
      out.cert = std::move(cert);
      return;
    }
    auto pcc = periodic_witness(ai, xs, action, cls.periodic_order);
    if (!pcc) {
      note("virtually nilpotent action but the periodic conjugacy witness did not verify");
      return;
    }
    Certificate cert = blank();
    cert.kind = CertificateKind::kPeriodicConjugacy;
    cert.case_index = {i, j, k};
    cert.depth = stick;
    cert.u = base_.to_word(x0);
    cert.v = group_.to_word(ai);
    cert.u_in_gens = c_expr;
    cert.v_in_gens = symbol(i);
    cert.max_gen_length = 4;
    cert.matrix = action;
    cert.relation = rel;
    cert.radius = cls.radius;
    cert.k = pcc->k;
    cert.c = pcc->c;
    cert.n = pcc->n;
    cert.reason = "a_i acts on the lattice of conjugates of [a_j,a_k] with root-of-unity eigenvalues (order " +
                  std::to_string(cls.periodic_order) + ")";
    out.cert = std::move(cert);
  }

  std::optional<PeriodicConjugacyWitness> periodic_witness(const Element& ai, const std::vector<Element>& xs,
                                                           const IntegerMatrix& action, unsigned r) const {
    const std::int64_t shift = SemidirectEngine::shift(ai);
    if (auto m = group_.abelian_action()) {
      const std::int64_t n = static_cast<std::int64_t>(r) * std::abs(shift);
      auto v = fixed_vector_of_power(*m, static_cast<unsigned>(n));
      if (!v) return std::nullopt;
      PeriodicConjugacyWitness w{static_cast<const AbelianEngine&>(base_).from_coords(*v), n, base_.identity()};
      if (!verify_periodic_conjugacy(group_, w)) return std::nullopt;
      return w;
    }
    auto f = fixed_vector_of_power(action, r);
    if (!f) return std::nullopt;
    Element k = base_.identity();
    for (Eigen::Index t = 0; t < f->size(); ++t) k = base_.multiply(k, base_.power(xs[t], (*f)(t)));
    // a_i^r = l t^n' and a_i^r k a_i^-r = k give alpha^n'(k) = l^-1 k l.
    const Element air = group_.power(ai, Integer(static_cast<long>(r)));
    const Element l = SemidirectEngine::base_component(air);
    const std::int64_t np = SemidirectEngine::shift(air);
    PeriodicConjugacyWitness w{k, np > 0 ? np : -np,
                               np > 0 ? base_.invert(l) : group_.apply_automorphism_power(l, -np)};
    if (!verify_periodic_conjugacy(group_, w)) return std::nullopt;
    return w;
  }

  const SemidirectEngine& group_;
  const GroupEngine& base_;
  std::vector<Word> gens_;
  std::vector<Element> elems_;
  double u_;
  unsigned d_;
};

}  // namespace

bool verify_periodic_conjugacy(const SemidirectEngine& group, const PeriodicConjugacyWitness& w) {
  const GroupEngine& base = group.base();
  if (w.n < 1 || base.is_identity(w.k)) return false;
  return base.equal(group.apply_automorphism_power(w.k, w.n), base.conjugate(w.c, w.k));
}

Certificate analyze(const SemidirectEngine& group, const std::vector<Word>& gens, double u, unsigned d,
                    unsigned threads) {
  if (!(u > 1.0)) throw Error(ErrorCode::kPrecondition, "u must exceed 1");
  if (d < 1) throw Error(ErrorCode::kPrecondition, "d must be >= 1");
  if (gens.empty()) throw Error(ErrorCode::kPrecondition, "empty generating set");
  Analyzer analyzer(group, gens, u, d);
  const auto& elems = analyzer.elements();
  const std::size_t n = elems.size();

  struct Case {
    std::size_t i, j, k;
    const Element* comm;
  };
  std::vector<Element> comms;
  std::vector<std::pair<std::size_t, std::size_t>> comm_index;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      Element c = group.commutator(elems[j], elems[k]);
      if (group.is_identity(c)) continue;
      comms.push_back(std::move(c));
      comm_index.emplace_back(j, k);
    }
  }
  std::vector<Case> cases;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < comms.size(); ++c) {
      cases.push_back({i, comm_index[c].first, comm_index[c].second, &comms[c]});
    }
  }

  std::vector<std::string> diagnostics;
  const std::size_t width = std::max(1u, threads);
  for (std::size_t start = 0; start < cases.size(); start += width) {
    const std::size_t end = std::min(cases.size(), start + width);
    std::vector<CaseOutcome> results(end - start);
    std::vector<std::string> errors(end - start);
    auto work = [&](std::size_t idx) {
      const Case& c = cases[start + idx];
      try {
        results[idx] = analyzer.run_case(c.i, c.j, c.k, *c.comm);
      } catch (const Error& e) {
        results[idx].diagnostics.push_back("case (" + std::to_string(c.i + 1) + "," + std::to_string(c.j + 1) +
                                           "," + std::to_string(c.k + 1) + "): " + e.what());
      }
    };
    if (width == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t idx = 0; idx < results.size(); ++idx) pool.emplace_back(work, idx);
      for (auto& t : pool) t.join();
    }
    for (auto& r : results) {
      diagnostics.insert(diagnostics.end(), r.diagnostics.begin(), r.diagnostics.end());
      if (r.cert) {
        r.cert->diagnostics = std::move(diagnostics);
        return std::move(*r.cert);
      }
    }
  }

  Certificate cert = analyzer.blank();
  cert.diagnostics = std::move(diagnostics);
  if (auto m = group.abelian_action()) {
    Classification cls = classify_abelian_by_cyclic(*m);
    if (cls.kind == GrowthClass::kVirtuallyNilpotent) {
      cert.kind = CertificateKind::kVirtuallyNilpotentDiagnosis;
      cert.matrix = *m;
      cert.radius = cls.radius;
      cert.reason = "abelian kernel and every eigenvalue of the action is a root of unity";
      return cert;
    }
  }
  cert.kind = CertificateKind::kInconclusive;
  cert.reason = comms.empty() ? "no generator commutator is nontrivial" : "no case produced a certificate";
  return cert;
}

bool reverify(const SemidirectEngine& group, const Certificate& cert) {
  const GroupEngine& base = group.base();
  auto kernel_match = [&](const Word& expr, const Word& base_word) {
    Element g = group.evaluate(expand_in_gens(expr, cert.generators));
    return SemidirectEngine::shift(g) == 0 &&
           base.equal(SemidirectEngine::base_component(g), base.evaluate(base_word));
  };
  switch (cert.kind) {
    case CertificateKind::kNonCyclicPair:
    case CertificateKind::kKernelChainEscape: {
      if (!cert.bound || !kernel_match(cert.u_in_gens, cert.u) || !kernel_match(cert.v_in_gens, cert.v)) {
        return false;
      }
      const std::size_t len = std::max(cert.u_in_gens.length(), cert.v_in_gens.length());
      if (len != cert.max_gen_length) return false;
      double expected = 0;
      if (cert.kind == CertificateKind::kNonCyclicPair) {
        if (len > 6) return false;
        expected = combined_bound(cert.u_param, len <= 4 ? BoundBranch::kPairInKernel : BoundBranch::kConjugatePair);
      } else {
        if (len > 2 * cert.d + 4) return false;
        expected = combined_bound(cert.u_param, BoundBranch::kKernelChain, cert.d);
      }
      if (*cert.bound != expected || !(expected > 1.0)) return false;
      const Element u = base.evaluate(cert.u);
      const Element v = base.evaluate(cert.v);
      if (base.family() == Family::kFree) {
        std::vector<Element> pair{u, v};
        return StallingsGraph::fold(pair).rank() == 2;
      }
      if (base.family() == Family::kAbelian && cert.kind == CertificateKind::kNonCyclicPair && cert.d == 1) {
        IntegerMatrix m(u.as<AbelianElement>().coords.size(), 2);
        m.col(0) = u.as<AbelianElement>().coords;
        m.col(1) = v.as<AbelianElement>().coords;
        return exact_rank(m) == 2;
      }
      return false;
    }
    case CertificateKind::kSpectralExponential:
    case CertificateKind::kPeriodicConjugacy: {
      if (cert.kind == CertificateKind::kPeriodicConjugacy) {
        if (!cert.k || !cert.c) return false;
        if (!verify_periodic_conjugacy(group, {*cert.k, cert.n, *cert.c})) return false;
        if (cert.relation.empty()) return true;
      }
      // The relation sum_t rel[t] x_t = 0 holds among the commuting conjugates.
      if (!kernel_match(cert.u_in_gens, cert.u)) return false;
      const Element a = group.evaluate(cert.v);
      std::vector<Element> xs{base.evaluate(cert.u)};
      while (xs.size() < cert.relation.size()) {
        xs.push_back(SemidirectEngine::base_component(group.conjugate(a, group.lift(xs.back()))));
      }
      Element acc = base.identity();
      for (std::size_t t = 0; t < xs.size(); ++t) {
        for (std::size_t p = 0; p < t; ++p) {
          if (!base.commute(xs[p], xs[t])) return false;
        }
        acc = base.multiply(acc, base.power(xs[t], cert.relation[t]));
      }
      if (!base.is_identity(acc)) return false;
      std::vector<Integer> monic = cert.relation;
      if (monic.back() < 0) {
        for (auto& c : monic) c = -c;
      }
      if (monic.back() != 1 || cert.matrix != companion(monic)) return false;
      Classification cls = classify_abelian_by_cyclic(cert.matrix);
      if (cert.kind == CertificateKind::kPeriodicConjugacy) return cls.kind == GrowthClass::kVirtuallyNilpotent;
      return cls.kind == GrowthClass::kExponential && cert.bound && *cert.bound == spectral_bound(cls.radius.lower) &&
             *cert.bound > 1.0;
    }
    case CertificateKind::kVirtuallyNilpotentDiagnosis: {
      auto m = group.abelian_action();
      return m && classify_abelian_by_cyclic(*m).kind == GrowthClass::kVirtuallyNilpotent;
    }
    case CertificateKind::kInconclusive:
      return true;
  }
  return false;
}

}  // namespace growthlab
