#include "tamari/paths.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "tamari/errors.hpp"

namespace tamari {

namespace {

std::vector<bool> parse_steps(std::string_view word, char north, char east) {
  std::vector<bool> steps;
  steps.reserve(word.size());
  for (char c : word) {
    if (c == north)
      steps.push_back(false);
    else if (c == east)
      steps.push_back(true);
    else
      throw InvalidInput(std::string("unexpected step character '") + c + "'");
  }
  return steps;
}

bool ballot_bits_valid(const std::vector<bool>& steps, int m, int* n_out) {
  long north = 0, east = 0;
  for (bool e : steps) {
    if (e) {
      ++east;
      if (east > static_cast<long>(m) * north) return false;
    } else {
      ++north;
    }
  }
  if (east != static_cast<long>(m) * north) return false;
  if (n_out) *n_out = static_cast<int>(north);
  return true;
}

bool dyck_bits_valid(const std::vector<bool>& steps, int m, int* n_out) {
  long height = 0, ups = 0, run = 0;
  for (bool e : steps) {
    if (e) {
      if (run % m != 0) return false;  // block split by a down step
      run = 0;
      if (--height < 0) return false;
    } else {
      ++ups;
      ++run;
      ++height;
    }
  }
  if (height != 0 || run % m != 0) return false;
  if (ups % m != 0) return false;
  if (n_out) *n_out = static_cast<int>(ups / m);
  return true;
}

}  // namespace

PathWord PathWord::ballot(std::string_view word, int m) {
  if (m < 1) throw InvalidInput("m must be positive");
  return from_bits(parse_steps(word, 'N', 'E'), m, Form::Ballot);
}

PathWord PathWord::dyck(std::string_view word, int m) {
  if (m < 1) throw InvalidInput("m must be positive");
  return from_bits(parse_steps(word, 'u', 'd'), m, Form::Dyck);
}

PathWord PathWord::from_bits(std::vector<bool> steps, int m, Form form) {
  if (m < 1) throw InvalidInput("m must be positive");
  PathWord p;
  p.m_ = m;
  p.form_ = form;
  p.steps_ = std::move(steps);
  bool ok = form == Form::Ballot ? ballot_bits_valid(p.steps_, m, &p.n_)
                                 : dyck_bits_valid(p.steps_, m, &p.n_);
  if (!ok)
    throw InvalidInput(form == Form::Ballot
                           ? "not a valid m-ballot word"
                           : "not a valid m-Dyck word (balance or blocks)");
  return p;
}

PathWord PathWord::bottom(int m, int n) {
  std::vector<bool> steps;
  steps.reserve(static_cast<std::size_t>(n) * (m + 1));
  for (int i = 0; i < n; ++i) {
    steps.push_back(false);
    for (int j = 0; j < m; ++j) steps.push_back(true);
  }
  return from_bits(std::move(steps), m, Form::Ballot);
}

PathWord PathWord::top(int m, int n) {
  std::vector<bool> steps;
  for (int i = 0; i < n; ++i) steps.push_back(false);
  for (int i = 0; i < m * n; ++i) steps.push_back(true);
  return from_bits(std::move(steps), m, Form::Ballot);
}

std::string PathWord::to_string() const {
  const char north = form_ == Form::Ballot ? 'N' : 'u';
  const char east = form_ == Form::Ballot ? 'E' : 'd';
  std::string s;
  s.reserve(steps_.size());
  for (bool e : steps_) s.push_back(e ? east : north);
  return s;
}

bool PathWord::operator<(const PathWord& o) const {
  // E/d sort before N/u, matching the textual order.
  const auto& a = steps_;
  const auto& b = o.steps_;
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i];  // east (true) is smaller
  return a.size() < b.size();
}

std::vector<int> PathWord::ascent_runs() const {
  std::vector<int> runs;
  int run = 0;
  for (bool e : steps_) {
    if (!e) {
      ++run;
    } else if (run > 0) {
      runs.push_back(run);
      run = 0;
    }
  }
  if (run > 0) runs.push_back(run);
  if (form_ == Form::Dyck)
    for (int& r : runs) r /= m_;
  return runs;
}

bool is_valid_ballot(std::string_view word, int m) {
  if (m < 1) return false;
  std::vector<bool> steps;
  steps.reserve(word.size());
  for (char c : word) {
    if (c == 'N')
      steps.push_back(false);
    else if (c == 'E')
      steps.push_back(true);
    else
      return false;
  }
  return ballot_bits_valid(steps, m, nullptr);
}

PathWord ballot_to_mdyck(const PathWord& p) {
  if (p.form() != Form::Ballot)
    throw InvalidInput("ballot_to_mdyck: input is not in ballot form");
  std::vector<bool> steps;
  steps.reserve(static_cast<std::size_t>(p.length()) * 2);
  for (bool e : p.steps()) {
    if (e) {
      steps.push_back(true);
    } else {
      for (int j = 0; j < p.m(); ++j) steps.push_back(false);
    }
  }
  return PathWord::from_bits(std::move(steps), p.m(), Form::Dyck);
}

PathWord mdyck_to_ballot(const PathWord& d) {
  if (d.form() != Form::Dyck)
    throw InvalidInput("mdyck_to_ballot: input is not in dyck form");
  std::vector<bool> steps;
  steps.reserve(static_cast<std::size_t>(d.length()));
  int run = 0;
  for (bool e : d.steps()) {
    if (e) {
      steps.push_back(true);
    } else {
      if (run == 0) steps.push_back(false);  // one north step per block
      if (++run == d.m()) run = 0;
    }
  }
  return PathWord::from_bits(std::move(steps), d.m(), Form::Ballot);
}

int contacts(const PathWord& p) {
  int count = 1;  // origin
  if (p.form() == Form::Ballot) {
    long x = 0, y = 0;
    for (bool e : p.steps()) {
      if (e)
        ++x;
      else
        ++y;
      if (x == static_cast<long>(p.m()) * y) ++count;
    }
  } else {
    long h = 0;
    for (bool e : p.steps()) {
      h += e ? -1 : 1;
      if (h == 0) ++count;
    }
  }
  return count;
}

int initial_rise(const PathWord& p) {
  int run = 0;
  for (bool e : p.steps()) {
    if (e) break;
    ++run;
  }
  return p.form() == Form::Dyck ? run / p.m() : run;
}

Int ballot_number(int m, int n) {
  if (n == 0) return Int(1);
  Int num = binomial(static_cast<long>(m + 1) * n, n);
  Int den(static_cast<long>(m) * n + 1);
  return num / den;
}

std::vector<PathWord> enumerate_paths(int m, int n, std::uint64_t cap) {
  if (m < 1 || n < 0) throw InvalidInput("enumerate_paths: bad parameters");
  Int total = ballot_number(m, n);
  if (total > Int(static_cast<unsigned long>(cap)))
    throw CapExceeded("enumerate_paths: " + total.get_str() +
                      " paths exceed cap " + std::to_string(cap));
  std::vector<PathWord> out;
  out.reserve(total.get_ui());
  std::vector<bool> steps(static_cast<std::size_t>(n) * (m + 1));
  // Lexicographic generation: at each slot try E (smaller) before N.
  std::function<void(int, int, int)> rec = [&](int pos, int north, int east) {
    if (pos == static_cast<int>(steps.size())) {
      out.push_back(PathWord::from_bits(steps, m, Form::Ballot));
      return;
    }
    if (east + 1 <= m * north && east + 1 <= m * n) {
      steps[static_cast<std::size_t>(pos)] = true;
      rec(pos + 1, north, east + 1);
    }
    if (north + 1 <= n) {
      steps[static_cast<std::size_t>(pos)] = false;
      rec(pos + 1, north + 1, east);
    }
  };
  rec(0, 0, 0);
  return out;
}

Int labellings_count(const PathWord& p) {
  Int count = factorial(static_cast<unsigned long>(p.size()));
  for (int r : p.ascent_runs())
    count /= factorial(static_cast<unsigned long>(r));
  return count;
}

bool is_valid_labelling(const Labelling& l) {
  const int n = l.path.size();
  if (static_cast<int>(l.labels.size()) != n) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : l.labels) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  int pos = 0;
  for (int r : l.path.ascent_runs()) {
    for (int i = 1; i < r; ++i)
      if (l.labels[static_cast<std::size_t>(pos + i - 1)] >
          l.labels[static_cast<std::size_t>(pos + i)])
        return false;
    pos += r;
  }
  return true;
}

std::vector<Labelling> enumerate_labellings(const PathWord& p) {
  std::vector<int> runs = p.ascent_runs();
  std::vector<Labelling> out;
  std::vector<int> avail(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) avail[static_cast<std::size_t>(i)] = i + 1;
  std::vector<int> labels;
  // Assign a sorted subset of the free labels to each ascent run in turn.
  std::function<void(std::size_t, std::vector<int>&)> rec =
      [&](std::size_t ri, std::vector<int>& pool) {
        if (ri == runs.size()) {
          out.push_back(Labelling{p, labels});
          return;
        }
        int r = runs[ri];
        std::vector<int> pick(static_cast<std::size_t>(r));
        std::function<void(std::size_t, std::size_t)> choose =
            [&](std::size_t from, std::size_t got) {
              if (got == pick.size()) {
                std::vector<int> rest;
                std::size_t k = 0;
                for (std::size_t i = 0; i < pool.size(); ++i) {
                  if (k < pick.size() && pool[i] == pick[k]) {
                    ++k;
                    continue;
                  }
                  rest.push_back(pool[i]);
                }
                for (int v : pick) labels.push_back(v);
                rec(ri + 1, rest);
                labels.resize(labels.size() - pick.size());
                return;
              }
              for (std::size_t i = from; i < pool.size(); ++i) {
                pick[got] = pool[i];
                choose(i + 1, got + 1);
              }
            };
        choose(0, 0);
      };
  rec(0, avail);
  return out;
}

ParkingFunction to_parking_function(const Labelling& l) {
  if (!is_valid_labelling(l)) throw InvalidInput("invalid labelling");
  const PathWord& p = l.path;
  ParkingFunction f;
  f.m = p.m();
  f.values.assign(static_cast<std::size_t>(p.size()), 0);
  long east = 0;
  int k = 0;
  if (p.form() == Form::Ballot) {
    for (bool e : p.steps()) {
      if (e) {
        ++east;
      } else {
        f.values[static_cast<std::size_t>(l.labels[static_cast<std::size_t>(k)] - 1)] =
            static_cast<int>(east) + 1;
        ++k;
      }
    }
  } else {
    // Blocks play the role of north steps; abscissa of a block is the
    // abscissa of the corresponding ballot north step, i.e. the number of
    // down steps before the block.
    int run = 0;
    for (bool e : p.steps()) {
      if (e) {
        ++east;
        run = 0;
      } else {
        if (run == 0) {
          f.values[static_cast<std::size_t>(
              l.labels[static_cast<std::size_t>(k)] - 1)] =
              static_cast<int>(east) + 1;
          ++k;
        }
        if (++run == p.m()) run = 0;
      }
    }
  }
  return f;
}

Labelling from_parking_function(const ParkingFunction& f) {
  const int m = f.m;
  const int n = static_cast<int>(f.values.size());
  if (m < 1) throw InvalidInput("parking function: m must be positive");
  std::map<int, std::vector<int>> buckets;  // abscissa -> labels
  for (int i = 0; i < n; ++i) {
    int val = f.values[static_cast<std::size_t>(i)];
    if (val < 1 || val > m * n)
      throw InvalidInput("parking function value out of range: " +
                         std::to_string(val));
    buckets[val - 1].push_back(i + 1);
  }
  std::vector<bool> steps;
  std::vector<int> labels;
  for (int x = 0; x < m * n; ++x) {
    auto it = buckets.find(x);
    if (it != buckets.end()) {
      std::sort(it->second.begin(), it->second.end());
      for (int lab : it->second) {
        steps.push_back(false);
        labels.push_back(lab);
      }
    }
    steps.push_back(true);
  }
  long north = 0, east = 0;
  for (bool e : steps) {
    if (e)
      ++east;
    else
      ++north;
    if (east > static_cast<long>(m) * north)
      throw InvalidInput("not a (1,m,...,m)-parking function");
  }
  return Labelling{PathWord::from_bits(std::move(steps), m, Form::Ballot),
                   std::move(labels)};
}

}  // namespace tamari
