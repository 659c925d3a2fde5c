#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "presclass/classify.hpp"
#include "presclass/group.hpp"
#include "presclass/morphism.hpp"
#include "presclass/presentation.hpp"

namespace presclass {

// <a^k x, a^m x> = DC_{4n} iff gcd(n, k - m) = 1. InvalidParameter for n < 2.
bool generates_pair_xx(int n, int k, int m);
// <a^k, a^m x> = DC_{4n} iff gcd(n, k) = 1.
bool generates_pair_ax(int n, int k, int m);
// Equivalence of two generating xx-pairs: always for even n, by parity of
// k - m for odd n. ContractViolation if either pair does not generate.
bool same_class_xx(int n, int k1, int m1, int k2, int m2);

// Order of a^k when (a^k, a^m x) generates: 2n, or n for odd n with
// gcd(2n, k) = 2; nullopt when the pair cannot generate.
std::optional<std::size_t> order_constraint_ax(int n, int k);

struct TheoremPrediction {
  int n = 0;
  std::size_t expected_class_count = 0;
  std::vector<OrderMultiset> multisets;
  // Element expressions in DC_{4n}, one per predicted class.
  std::vector<std::string> representatives;
};

TheoremPrediction predicted_classification(int n);

enum class PiVariant { kZero, kOne, kN };

std::string to_string(PiVariant variant);
std::optional<PiVariant> parse_variant(std::string_view text);

// "<a,x | a^2n, x^2=a^n, x^-1*a*x=a^-1>" with n substituted.
std::string classical_presentation_text(int n);
// Pi_{4n,i}. Variants kZero and kN require odd n (InvalidParameter).
std::string pi_presentation_text(int n, PiVariant variant);
Presentation pi_presentation(int n, PiVariant variant);

struct MorphismPair {
  int n = 0;
  PiVariant variant = PiVariant::kOne;
  std::string presentation;
  // phi: a, x -> words in the Pi generators; psi: Pi generators -> words in a, x.
  GeneratorMap phi;
  GeneratorMap psi;
};

MorphismPair morphism_pair(int n, PiVariant variant);

namespace detail {
// Same data without the parity check, for exercising the odd-n assumption.
std::string pi_presentation_text_unchecked(int n, PiVariant variant);
MorphismPair morphism_pair_unchecked(int n, PiVariant variant);
}  // namespace detail

// Runs check_mutual_inverse on DC_{4n} and the realised Pi presentation.
MutualInverseCheck check_morphism_pair(const MorphismPair& pair);

inline constexpr int kDefaultTheoremMaxN = 8;

struct TheoremOptions {
  std::size_t jobs = 1;
  bool orbit_collapse = false;
  int max_n = kDefaultTheoremMaxN;
};

struct MorphismOutcome {
  PiVariant variant = PiVariant::kOne;
  bool pass = false;
};

struct TheoremCheck {
  int n = 0;
  TheoremPrediction predicted;
  ClassificationReport observed;
  bool count_matches = false;
  bool multisets_match = false;
  // Every predicted representative generates and lands in its own class.
  bool representatives_distinct = false;
  std::vector<MorphismOutcome> morphisms;
  std::vector<std::string> diagnostics;
  bool pass = false;
};

// Confronts predicted_classification(n) with classify(DC_{4n}, 2, directed,
// minimal) and checks the morphism pairs for every applicable variant.
// GuardError unless 2 <= n <= options.max_n.
TheoremCheck verify_theorem(int n, const TheoremOptions& options = {});

// {"n","predicted","observed","morphisms_checked","pass"}.
std::string theorem_check_to_json(const TheoremCheck& check);

}  // namespace presclass
