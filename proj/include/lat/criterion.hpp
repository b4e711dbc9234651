#ifndef LAT_CRITERION_HPP
#define LAT_CRITERION_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lat/embedding.hpp"

namespace lat {

class MemberNotInS : public Error {
 public:
  explicit MemberNotInS(std::size_t index)
      : Error("set member " + std::to_string(index) + " is not represented by any target form"), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

class NotGenerated : public Error {
 public:
  NotGenerated() : Error("lattice is not generated by vectors up to its reduced maximal diagonal") {}
};

class DuplicateMember : public Error {
 public:
  DuplicateMember(std::size_t i, std::size_t j)
      : Error("set members " + std::to_string(i) + " and " + std::to_string(j) + " are isometric") {}
};

struct FormSet {
  std::vector<GramMatrix> members;
  std::string description;
};

// Throws DuplicateMember if two members are isometric.
FormSet make_form_set(std::vector<GramMatrix> members, std::string description = {});

struct SearchSpace {
  std::size_t rank = 1;
  std::int64_t max_diag = 1;
  std::optional<Integer> max_det;
};

// Shard i of K takes the diagonal tuples whose index in canonical order is
// congruent to i mod K.
struct Shard {
  std::size_t index = 0;
  std::size_t count = 1;
};

// Visits one representative per isometry class in canonical order; the
// visitor returns false to stop. For rank <= 4 every class is emitted under
// its successive minima, so shards partition the classes exactly.
void for_each_class(const SearchSpace& space, const std::function<bool(const GramMatrix&)>& visit,
                    Shard shard = {});

std::vector<GramMatrix> enumerate_classes(const SearchSpace& space, Shard shard = {});

bool represents_all(const GramMatrix& q, const FormSet& s);

enum class Verdict { VerifiedWithinSpace, Counterexample };

struct Counterexample {
  GramMatrix q;
  GramMatrix missing;
  // certificates[i] embeds the i-th set member into q.
  std::vector<Embedding> certificates;
};

struct CriterionReport {
  Verdict verdict = Verdict::VerifiedWithinSpace;
  SearchSpace space;
  Shard shard;
  std::uint64_t classes_checked = 0;
  std::optional<Counterexample> counterexample;
};

// Re-checks a counterexample without reference to the search space.
bool verify_counterexample(const Counterexample& c, const FormSet& s_prime);

// Every Q in the space representing all of s_prime must represent each
// target. Throws MemberNotInS if a member of s_prime is represented by no
// target.
CriterionReport check_criterion(const std::vector<GramMatrix>& targets, const FormSet& s_prime,
                                const SearchSpace& space, Shard shard = {});
CriterionReport check_criterion(const GramMatrix& a, const FormSet& s_prime, const SearchSpace& space,
                                Shard shard = {});

struct MinimalityEntry {
  GramMatrix dropped;
  std::optional<GramMatrix> witness;
  bool witness_from_list = false;
};

struct MinimalityReport {
  std::vector<MinimalityEntry> entries;
  SearchSpace space;
  bool minimal() const;
};

MinimalityReport check_minimality(const std::vector<GramMatrix>& targets, const FormSet& s_prime,
                                  const std::vector<GramMatrix>& witnesses, const SearchSpace& space);
MinimalityReport check_minimality(const GramMatrix& a, const FormSet& s_prime,
                                  const std::vector<GramMatrix>& witnesses, const SearchSpace& space);

// Every norm-2 vector is orthogonal to all norm-1 vectors or is a sum of two
// orthogonal norm-1 vectors.
bool check_norm2_lemma(const GramMatrix& q);

struct Prop2Result {
  bool holds = false;
  Rational min_dual_norm;
  Integer generating_bound;
};

// holds iff the smallest bound generating l_prime is below the minimal dual
// norm of l.
Prop2Result check_prop2_hypothesis(const GramMatrix& l, const GramMatrix& l_prime);

struct PartitionFamily {
  FormSet ground;
  std::vector<std::vector<std::size_t>> parts;  // indices into ground.members
};

struct Prop3Report {
  std::vector<bool> unimodular;                             // per ground member
  std::vector<std::pair<std::size_t, std::size_t>> not_coprime;
  bool covers_ground = false;
  std::vector<bool> part_needed;                            // per part
  std::vector<GramMatrix> criterion_set;                    // direct sum of each part
  bool passed() const;
};

Prop3Report check_prop3(const PartitionFamily& family);

}  // namespace lat

#endif  // LAT_CRITERION_HPP
