#include <algorithm>
#include <set>

#include <doctest.h>

#include "lucas/catalog.hpp"
#include "lucas/errors.hpp"
#include "support.hpp"

using namespace lucas;

namespace {

SumOptions at(int digits) {
  SumOptions o;
  o.eps = pow10(-digits);
  return o;
}

const IdentityRecord* find(const std::string& id) {
  for (const IdentityRecord& r : list_catalog())
    if (r.id == id) return &r;
  return nullptr;
}

QuadExt q5(Rational a, Rational b) { return QuadExt(std::move(a), std::move(b), 5); }

}  // namespace

TEST_CASE("catalog contents") {
  for (const char* id : {"LUCAS-1870", "HOGGATT-BICKNELL(k)", "BG-L3N(k)", "EQ-2.5-a", "EQ-2.5-b",
                         "EQ-2.5-c", "EQ-2.5-d", "EQ-2.6(k,a)", "EQ-2.10", "EQ-2.11", "EQ-2.12",
                         "EQ-3.5-a", "EQ-3.5-b", "EQ-3.5-c", "EQ-3.7", "EQ-3.8(r)", "MELHAM-SHANNON",
                         "COLL-A", "COLL-D"}) {
    CAPTURE(id);
    CHECK(find(id) != nullptr);
  }
  std::set<std::string> ids;
  for (const IdentityRecord& r : list_catalog()) CHECK(ids.insert(r.id).second);
  REQUIRE(find("HOGGATT-BICKNELL(k)"));
  CHECK(find("HOGGATT-BICKNELL(k)")->parameters == std::vector<std::string>{"k"});
}

TEST_CASE("expand_id") {
  CHECK(expand_id("LUCAS-1870") == std::vector<std::string>{"LUCAS-1870"});
  CHECK(expand_id("EQ-2.8") == std::vector<std::string>{"LUCAS-1870"});
  CHECK(expand_id("HOGGATT-BICKNELL").size() == 3);
  CHECK(expand_id("EQ-2.6(k,a)").size() == 6);
  CHECK(expand_id("EQ-2.6(k=2,a=3)") == std::vector<std::string>{"EQ-2.6(k=2,a=3)"});
  CHECK_THROWS_AS(expand_id("NO-SUCH"), UnknownIdentity);
  CHECK_THROWS_AS(verify_entry("NO-SUCH", at(10)), UnknownIdentity);
  CHECK_THROWS_AS(verify_entry("EQ-2.6(k=1)", at(10)), UnknownIdentity);
}

TEST_CASE("verify_entry examples") {
  SumOptions o = at(30);
  VerificationReport l = verify_entry("LUCAS-1870", o);
  CHECK(l.pass);
  REQUIRE(l.exact);
  CHECK(*l.exact == q5(Rational(7, 2), Rational(-1, 2)));
  CHECK(l.lhs.contains(*l.exact));
  CHECK(l.rhs.contains(*l.exact));
  CHECK(oracle::consistent(l.lhs, "2.38196601125010515179541316563436188227969082019423"));

  VerificationReport d = verify_entry("EQ-2.5-d", o);
  CHECK(d.pass);
  CHECK(*d.exact == q5(-2, 1));

  VerificationReport e = verify_entry("EQ-2.11", o);
  CHECK(e.pass);
  CHECK(e.lhs.hi() < 0);
  CHECK(*e.exact == q5(Rational(1, 2), Rational(-1, 2)));
}

TEST_CASE("printed values") {
  SumOptions o = at(30);
  struct Case {
    const char* id;
    QuadExt value;
  };
  for (const Case& c : {Case{"EQ-2.5-a", q5(Rational(-1, 2), Rational(1, 2))},
                        Case{"EQ-2.5-b", q5(Rational(3, 2), Rational(-1, 2))},
                        Case{"EQ-2.5-d", q5(-2, 1)},
                        Case{"EQ-2.10", q5(Rational(-1, 2), Rational(1, 2))},
                        Case{"EQ-2.12", q5(1, -1)}}) {
    CAPTURE(c.id);
    VerificationReport r = verify_entry(c.id, o);
    CHECK(r.pass);
    REQUIRE(r.exact);
    CHECK(*r.exact == c.value);
    CHECK(r.lhs.width() <= o.eps);
    CHECK(r.lhs.contains(c.value));
  }
}

TEST_CASE("series-valued identities agree with direct sums") {
  SumOptions o = at(30);
  VerificationReport m = verify_entry("MELHAM-SHANNON", o);
  CHECK(m.pass);
  CHECK(oracle::consistent(m.lhs, "0.38908306689512282319101381798891208813057978745723"));
  VerificationReport c = verify_entry("COLL-D", o);
  CHECK(c.pass);
  CHECK(oracle::consistent(c.lhs, "2.39191157203502719200694960004260404055103241916519"));
  VerificationReport a = verify_entry("COLL-A", at(20));
  CHECK(a.pass);
  CHECK(oracle::consistent(a.lhs, "0.25081953905430888222581211525837047611478067582458"));
}

TEST_CASE("verify_all") {
  CatalogSummary s = verify_all(at(30));
  CHECK(s.failed == 0);
  CHECK(s.passed == static_cast<std::int64_t>(s.reports.size()));
  CHECK(std::is_sorted(s.reports.begin(), s.reports.end(),
                       [](const auto& a, const auto& b) { return a.id < b.id; }));
  for (const VerificationReport& r : s.reports) {
    CAPTURE(r.id);
    CHECK(r.error.empty());
    if (r.exact) CHECK(r.lhs.contains(*r.exact));
  }

  CatalogSummary weak = verify_all(at(1));
  CHECK(weak.failed == 0);

  CatalogSummary none = verify_all(at(10), CatalogGrid::empty());
  CHECK(none.reports.empty());
  CHECK(none.passed == 0);
  CHECK(none.failed == 0);

  CatalogSummary serial = verify_all(at(30), {}, false);
  REQUIRE(serial.reports.size() == s.reports.size());
  for (std::size_t i = 0; i < s.reports.size(); ++i) {
    CHECK(serial.reports[i].id == s.reports[i].id);
    CHECK(serial.reports[i].lhs == s.reports[i].lhs);
  }
}
