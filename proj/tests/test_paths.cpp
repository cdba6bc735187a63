#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "tamari/errors.hpp"
#include "tamari/paths.hpp"

using namespace tamari;

TEST_CASE("ballot validity") {
  CHECK(is_valid_ballot("", 1));
  CHECK(is_valid_ballot("", 7));
  CHECK(is_valid_ballot("NENE", 1));
  CHECK_FALSE(is_valid_ballot("ENNE", 1));
  CHECK(is_valid_ballot("NEENEE", 2));
  CHECK_FALSE(is_valid_ballot("NEEE", 2));   // wrong step totals
  CHECK_FALSE(is_valid_ballot("NEEEEN", 2)); // dips below the line
  CHECK_FALSE(is_valid_ballot("NXNE", 1));   // malformed alphabet
  CHECK_FALSE(is_valid_ballot("udud", 1));   // dyck letters are not ballot
}

TEST_CASE("ballot to m-dyck and back") {
  CHECK(ballot_to_mdyck(PathWord::ballot("NE", 1)).to_string() == "ud");
  CHECK(ballot_to_mdyck(PathWord::ballot("NEE", 2)).to_string() == "uudd");
  CHECK(ballot_to_mdyck(PathWord::ballot("NENEEE", 2)).to_string() ==
        "uuduuddd");
  CHECK(mdyck_to_ballot(PathWord::dyck("ud", 1)).to_string() == "NE");
  CHECK(mdyck_to_ballot(PathWord::dyck("uudd", 2)).to_string() == "NEE");
  // Malformed inputs are rejected at construction.
  CHECK_THROWS_AS(PathWord::dyck("ududd", 1), InvalidInput);   // unbalanced
  CHECK_THROWS_AS(PathWord::dyck("uudd", 3), InvalidInput);    // blocks
  CHECK_THROWS_AS(PathWord::dyck("ududud", 2), InvalidInput);  // blocks split
}

TEST_CASE("round trips over all enumerated paths") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 0; n <= 4; ++n)
      for (const PathWord& p : enumerate_paths(m, n)) {
        PathWord d = ballot_to_mdyck(p);
        CHECK(mdyck_to_ballot(d) == p);
        CHECK(ballot_to_mdyck(mdyck_to_ballot(d)) == d);
      }
}

TEST_CASE("contacts") {
  CHECK(contacts(PathWord::ballot("", 1)) == 1);
  CHECK(contacts(PathWord::ballot("NENE", 1)) == 3);
  CHECK(contacts(PathWord::ballot("NNEE", 1)) == 2);
  CHECK(contacts(PathWord::ballot("NEENEE", 2)) == 3);
  // Contacts survive the rotation to dyck form.
  for (const PathWord& p : enumerate_paths(2, 3))
    CHECK(contacts(p) == contacts(ballot_to_mdyck(p)));
}

TEST_CASE("initial rise") {
  CHECK(initial_rise(PathWord::ballot("", 1)) == 0);
  CHECK(initial_rise(PathWord::ballot("NNEE", 1)) == 2);
  CHECK(initial_rise(PathWord::ballot("NENE", 1)) == 1);
  // Dyck form counts blocks.
  CHECK(initial_rise(PathWord::dyck("uuuudddd", 2)) == 2);
  for (const PathWord& p : enumerate_paths(2, 3))
    CHECK(initial_rise(p) == initial_rise(ballot_to_mdyck(p)));
}

TEST_CASE("enumeration matches the ballot numbers") {
  CHECK(enumerate_paths(1, 3).size() == 5);
  CHECK(enumerate_paths(2, 2).size() == 3);
  CHECK(enumerate_paths(1, 0).size() == 1);
  CHECK(enumerate_paths(1, 0)[0].empty());
  for (int m = 1; m <= 3; ++m)
    for (int n = 0; n <= 5; ++n)
      CHECK(Int(enumerate_paths(m, n).size()) == ballot_number(m, n));
  // Lexicographic order.
  auto paths = enumerate_paths(1, 3);
  for (std::size_t i = 1; i < paths.size(); ++i)
    CHECK(paths[i - 1] < paths[i]);
  CHECK_THROWS_AS(enumerate_paths(1, 12, 1000), CapExceeded);
}

TEST_CASE("labellings count") {
  CHECK(labellings_count(PathWord::ballot("", 1)) == 1);
  CHECK(labellings_count(PathWord::ballot("NENE", 1)) == 2);
  CHECK(labellings_count(PathWord::ballot("NNEE", 1)) == 1);
  // Sum over all paths = (mn+1)^{n-1}.
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 4; ++n) {
      Int total(0);
      for (const PathWord& p : enumerate_paths(m, n))
        total += labellings_count(p);
      CHECK(total == int_pow(Int(m * n + 1), static_cast<unsigned long>(n - 1)));
    }
  // The explicit enumeration agrees with the multinomial count.
  for (const PathWord& p : enumerate_paths(2, 3)) {
    auto all = enumerate_labellings(p);
    CHECK(Int(all.size()) == labellings_count(p));
    for (const Labelling& l : all) CHECK(is_valid_labelling(l));
  }
}

TEST_CASE("parking function bijection examples") {
  Labelling l1{PathWord::ballot("NENE", 1), {1, 2}};
  CHECK(to_parking_function(l1).values == std::vector<int>{1, 2});
  Labelling l2{PathWord::ballot("NNEE", 1), {1, 2}};
  CHECK(to_parking_function(l2).values == std::vector<int>{1, 1});
  Labelling back = from_parking_function(ParkingFunction{1, {1, 1}});
  CHECK(back.path.to_string() == "NNEE");
  CHECK(back.labels == std::vector<int>{1, 2});
  // Out-of-range abscissa.
  CHECK_THROWS_AS(from_parking_function(ParkingFunction{1, {3}}), InvalidInput);
  // Not realizable: both cars claim abscissa 1, nothing at 0.
  CHECK_THROWS_AS(from_parking_function(ParkingFunction{1, {2, 2}}),
                  InvalidInput);
}

TEST_CASE("parking functions biject with labelled paths") {
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 3; ++n) {
      std::set<ParkingFunction> image;
      Int count(0);
      for (const PathWord& p : enumerate_paths(m, n))
        for (const Labelling& l : enumerate_labellings(p)) {
          ParkingFunction f = to_parking_function(l);
          CHECK(image.insert(f).second);  // injective
          Labelling back = from_parking_function(f);
          CHECK(back.path == l.path);
          CHECK(back.labels == l.labels);
          ++count;
        }
      CHECK(Int(image.size()) == count);
      CHECK(count == int_pow(Int(m * n + 1), static_cast<unsigned long>(n - 1)));
    }
}
