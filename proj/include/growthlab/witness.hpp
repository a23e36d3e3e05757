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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "growthlab/element.hpp"
#include "growthlab/engine.hpp"
#include "growthlab/integer.hpp"
#include "growthlab/spectra.hpp"
#include "growthlab/word.hpp"

namespace growthlab {

enum class BoundBranch { kPairInKernel, kConjugatePair, kInfiniteKernel, kKernelChain };

/// Lower bound on omega(G, A) contributed by one branch of the case analysis:
/// u^(1/4), u^(1/6), 2^(1/16) and u^(1/(2d+4)) respectively.
double combined_bound(double u, BoundBranch branch, unsigned d = 1);

/// Nontrivial commutators [a_j^e, a_k^f] (j < k, e, f = +-1) as words.
std::vector<Word> commutator_candidates(const GroupEngine& engine, const std::vector<Word>& gens);

enum class CertificateKind {
  kNonCyclicPair,
  kKernelChainEscape,
  kSpectralExponential,
  kPeriodicConjugacy,
  kVirtuallyNilpotentDiagnosis,
  kInconclusive,
};

const char* certificate_kind_name(CertificateKind kind);

struct Certificate {
  CertificateKind kind = CertificateKind::kInconclusive;
  std::vector<Word> generators;
  unsigned d = 1;
  double u_param = 0;
  /// (i, j, k) of the case that produced the certificate, 0-based.
  std::optional<std::array<std::size_t, 3>> case_index;

  /// Kernel elements as base words, and the same elements as words over
  /// the symbols a1..an naming the generators.
  Word u;
  Word v;
  Word u_in_gens;
  Word v_in_gens;
  std::size_t max_gen_length = 0;
  std::size_t depth = 0;
  std::optional<double> bound;

  /// SpectralExponential: action of the generator v on the lattice spanned
  /// by the conjugates of u, and the integer relation among them.
  IntegerMatrix matrix;
  std::vector<Integer> relation;
  RadiusBracket radius;

  /// PeriodicConjugacy: alpha^n(k) = c k c^-1 in the base.
  std::optional<Element> k;
  std::optional<Element> c;
  std::int64_t n = 0;

  std::string reason;
  std::vector<std::string> diagnostics;
};

/// Runs the commutator case analysis on the generating set `gens` of the
/// mapping torus `group`. Cases (i, j, k) are tried in lexicographic order
/// and the first one that yields a certificate wins; `threads` only changes
/// how many cases are evaluated at once.
Certificate analyze(const SemidirectEngine& group, const std::vector<Word>& gens, double u,
                    unsigned d, unsigned threads = 1);

/// Independent re-check of a certificate produced by analyze or pcc_scan.
bool reverify(const SemidirectEngine& group, const Certificate& cert);

/// Substitutes generator words for the symbols a1..an.
Word expand_in_gens(const Word& expression, const std::vector<Word>& gens);

struct PeriodicConjugacyWitness {
  Element k;
  std::int64_t n = 0;
  Element c;
};

struct PccResult {
  std::optional<PeriodicConjugacyWitness> witness;
  /// True when a None answer is a proof (abelian bases); false when it only
  /// means "none within the search bounds".
  bool exact = false;
};

/// Searches for k != e and 1 <= n <= max_period with alpha^n(k) conjugate to
/// k in the base. Free bases scan cyclically reduced words up to rotation,
/// Klein bases scan a^i t^j with |i| + |j| <= max_length; abelian bases are
/// decided exactly from the action matrix. Other bases throw
/// kUnsupportedFamily.
PccResult pcc_scan(const SemidirectEngine& group, std::int64_t max_period, std::size_t max_length);

/// alpha^n(k) == c k c^-1, n >= 1 and k != e.
bool verify_periodic_conjugacy(const SemidirectEngine& group, const PeriodicConjugacyWitness& w);

}  // namespace growthlab
