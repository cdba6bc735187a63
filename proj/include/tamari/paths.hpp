#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tamari/rational.hpp"

namespace tamari {

enum class Form { Ballot, Dyck };

// A step word: an m-ballot path over {N,E} or its m-Dyck image over
// {u,d}.  Steps are stored as a bit sequence (0 = north/up, 1 = east/down).
// Immutable after construction.
class PathWord {
 public:
  // Validating constructors; throw InvalidInput on malformed words.
  static PathWord ballot(std::string_view word, int m);
  static PathWord dyck(std::string_view word, int m);
  static PathWord from_bits(std::vector<bool> steps, int m, Form form);
  static PathWord bottom(int m, int n);  // (N E^m)^n
  static PathWord top(int m, int n);     // N^n E^{mn}

  int m() const { return m_; }
  Form form() const { return form_; }
  int size() const { return n_; }  // north steps (ballot) or blocks (dyck)
  int length() const { return static_cast<int>(steps_.size()); }
  bool empty() const { return steps_.empty(); }
  const std::vector<bool>& steps() const { return steps_; }
  bool is_east(int i) const { return steps_[static_cast<std::size_t>(i)]; }

  std::string to_string() const;
  bool operator==(const PathWord& o) const = default;
  // Lexicographic on the textual form (E < N, d < u).
  bool operator<(const PathWord& o) const;

  // Lengths of maximal north runs, in north steps (ballot) or blocks (dyck).
  std::vector<int> ascent_runs() const;

 private:
  int m_ = 1;
  int n_ = 0;
  Form form_ = Form::Ballot;
  std::vector<bool> steps_;
};

// Prefix test without construction; false on malformed alphabet.
bool is_valid_ballot(std::string_view word, int m);

PathWord ballot_to_mdyck(const PathWord& p);
PathWord mdyck_to_ballot(const PathWord& d);

// Vertices on the line {x = my} (ballot) or on the axis (dyck),
// endpoints included.  The empty path has one contact.
int contacts(const PathWord& p);
// Length of the initial run of north steps (in blocks for dyck form).
int initial_rise(const PathWord& p);

inline constexpr std::uint64_t kDefaultCap = 100000;

// Number of m-ballot paths of size n: C((m+1)n, n) / (mn+1).
Int ballot_number(int m, int n);
// All m-ballot paths of size n in lexicographic order.
std::vector<PathWord> enumerate_paths(int m, int n,
                                      std::uint64_t cap = kDefaultCap);

// Number of label assignments increasing along every maximal ascent run.
Int labellings_count(const PathWord& p);

// labels[k] is the label of the k-th north step (k-th block for dyck
// form), in path order.
struct Labelling {
  PathWord path;
  std::vector<int> labels;
};

bool is_valid_labelling(const Labelling& l);
std::vector<Labelling> enumerate_labellings(const PathWord& p);

// values[i-1] = abscissa of the north step labelled i, plus one.
struct ParkingFunction {
  int m = 1;
  std::vector<int> values;
  bool operator==(const ParkingFunction& o) const = default;
  bool operator<(const ParkingFunction& o) const {
    return values < o.values;
  }
};

ParkingFunction to_parking_function(const Labelling& l);
Labelling from_parking_function(const ParkingFunction& f);

}  // namespace tamari
