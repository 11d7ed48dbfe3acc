#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fgtool/algebra.hpp"

namespace fgtool {

/// One signed generator occurrence; sign is +1 or -1.
struct Letter {
  std::string gen;
  int sign = 1;
};

bool operator==(const Letter& a, const Letter& b);

/// A word over signed generators; the empty word is the identity.
using Word = std::vector<Letter>;

Word free_reduce(const Word& w);
Word inverse_word(const Word& w);
Word concat(const Word& a, const Word& b);

/// Finite group presentation. Relators are stored freely reduced and only
/// use declared generators.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
};

Presentation make_presentation(std::vector<std::string> generators,
                               std::vector<Word> relators);

bool operator==(const Presentation& a, const Presentation& b);

/// Tietze simplification: drops empty and duplicate relators and eliminates
/// a generator whenever some relator contains exactly one occurrence of it.
/// The presented group is unchanged.
Presentation simplify_presentation(const Presentation& p);

bool is_trivial_presentation(const Presentation& p); // simplifies to <|>
bool is_free_presentation(const Presentation& p);    // no relators left

struct AbelianInvariants {
  int rank = 0;
  std::vector<BigInt> torsion; // divisor chain, entries > 1
};

bool operator==(const AbelianInvariants& a, const AbelianInvariants& b);

/// Smith normal form of the relator exponent-sum matrix.
AbelianInvariants abelianization_invariants(const Presentation& p);

/// dim_k Hom(G, k^+) for a group with the given abelianization: free rank
/// plus the number of torsion factors the characteristic divides.
int hom_kplus_dimension(const AbelianInvariants& inv, long long characteristic);

/// Finite group given by its multiplication table.
struct FiniteGroupTable {
  std::string name;
  int order = 0;
  std::vector<int> mul; // order x order
  std::vector<int> inv;
  int identity = 0;

  int times(int a, int b) const { return mul[static_cast<size_t>(a) * order + b]; }
};

FiniteGroupTable cyclic_group(int n);            // named C<n>
FiniteGroupTable symmetric_group(int n);         // named S<n>, n <= 5
const FiniteGroupTable& builtin_group(const std::string& name); // C2 C3 C4 C6 S3 S4

inline constexpr unsigned long long kDefaultHomBudget = 100'000'000ULL;

/// Number of homomorphisms into the target: tuples of images, one per
/// generator, satisfying every relator. Tuples are enumerated over the
/// generators that occur in relators; generators free of relations
/// contribute a factor of |target| each. Throws TargetTooLarge when the
/// enumerated tuple count exceeds the budget.
unsigned long long count_homs(const Presentation& p, const FiniteGroupTable& target,
                              unsigned long long budget = kDefaultHomBudget);

/// Computable isomorphism invariants. Two reports compare equal iff all
/// fields are equal.
struct InvariantReport {
  int abelianRank = 0;
  std::vector<BigInt> torsion;
  std::map<std::string, unsigned long long> homCounts;
};

bool operator==(const InvariantReport& a, const InvariantReport& b);

/// Abelianization plus hom counts into C2, C3, C4, S3, and S4 when the S4
/// enumeration fits the budget. The presentation is Tietze-simplified
/// first; all invariants are unchanged by that. Skipped targets are
/// reported through `notes` when given.
InvariantReport invariant_suite(const Presentation& p,
                                unsigned long long budget = kDefaultHomBudget,
                                std::vector<std::string>* notes = nullptr);

std::string describe_group(const Presentation& p); // "trivial", "free of rank n", or ""

} // namespace fgtool
