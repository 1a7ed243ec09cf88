#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arrfree/freeness.hpp"

namespace arrfree {

struct Move {
  enum class Kind { Add, Delete };
  Kind kind = Kind::Delete;
  Line line;

  std::string to_string() const;
};

/// Moves leading from `start` down to the empty arrangement. exponents[i] is
/// the exponent triple of the arrangement reached after i moves.
struct Chain {
  Arrangement start;
  std::vector<Move> moves;
  std::vector<Exponents> exponents;

  int additions() const;
  int deletions() const;
};

/// Replays the chain from scratch: fresh lattice and is_free at every stage,
/// exponents must match, the last stage must be empty.
bool verify_chain(const Chain& c);

struct DeletionCandidate {
  int index = -1;
  Line line;
  int n = 0;  // n_{A,H}
  FreenessResult result;
};

enum class Stratum { Join, Pencil, Generic };
std::string to_string(Stratum s);

struct AdditionCandidate {
  Line line;
  Stratum stratum = Stratum::Join;
  /// For Join: the two lattice points joined. For Pencil: the centre.
  std::vector<int> points;
  int n = 0;  // n_{A ∪ {L}, L}
  FreenessResult result;
};

/// Every one-line deletion with its verdict. Requires a free A.
std::vector<DeletionCandidate> deletion_candidates(const Arrangement& a, const LatticeData& l);
std::vector<DeletionCandidate> free_deletions(const Arrangement& a, const LatticeData& l);
std::vector<DeletionCandidate> free_deletions(const Arrangement& a);

/// One candidate per stratum of lines not in A: joins of lattice point
/// pairs, one generic member of each pencil through a lattice point, and one
/// generic line. Over a parametric field only joins are produced.
std::vector<AdditionCandidate> addition_candidates(const Arrangement& a, const LatticeData& l);
std::vector<AdditionCandidate> free_additions(const Arrangement& a, const LatticeData& l);
std::vector<AdditionCandidate> free_additions(const Arrangement& a);

/// Deletion chain certifying inductive freeness, or nullopt.
std::optional<Chain> is_inductively_free(const Arrangement& a);

enum class RecursiveStatus { Yes, No, Unknown };
std::string to_string(RecursiveStatus s);

struct RecursiveVerdict {
  RecursiveStatus status = RecursiveStatus::Unknown;
  std::optional<Chain> chain;
  /// Filled for No: every candidate of A, all refuted.
  std::vector<AdditionCandidate> refuted_additions;
  std::vector<DeletionCandidate> refuted_deletions;
  int size_bound = 0;
  int states = 0;
};

struct RecursiveOptions {
  int max_size = -1;  // default |A| + 3
  int max_states = 4000;
};

/// Breadth-first search over free one-line moves with arrangements of at
/// most max_size lines. Requires a free A.
RecursiveVerdict recursive_freeness_bounded(const Arrangement& a, RecursiveOptions opts = {});

}  // namespace arrfree
