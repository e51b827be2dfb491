#include <gtest/gtest.h>

#include <sstream>

#include "resint/errors.hpp"
#include "resint/struct_ring.hpp"

using namespace resint;

TEST(StructRing, BlowUpProducts) {
  const auto bl = blowup_p2_at_point();
  const StructRing& r = *bl;
  EXPECT_EQ(r.mul(r.element("e"), r.element("e")), r.element("P", -1));
  EXPECT_TRUE(r.is_zero(r.mul(r.element("h"), r.element("e"))));
  EXPECT_EQ(r.mul(r.element("h"), r.element("h")), r.element("P"));
  EXPECT_EQ(struct_mul(r, r.element("h"), r.one()), r.element("h"));
  EXPECT_EQ(r.integrate(r.element("P")), 1);
  EXPECT_EQ(struct_integrate(r, r.parse("3*P + h")), 3);
  EXPECT_EQ(r.top_degree(), 2);
}

TEST(StructRing, BlowUpPushforward) {
  const auto bl = blowup_p2_at_point();
  const StructRing& r = *bl;
  const StructRing& p2 = r.pushforward_target();
  EXPECT_TRUE(p2.is_zero(struct_pushforward(r, r.element("e"))));
  EXPECT_EQ(r.pushforward(r.element("h")), p2.element("h"));
  EXPECT_EQ(r.pushforward(r.parse("2*P - e")), p2.element("pt", 2));
  EXPECT_THROW(p2.pushforward(p2.one()), UnsupportedOperation);
  EXPECT_THROW(p2.pushforward_target(), UnsupportedOperation);
}

TEST(StructRing, ProjectiveSpace) {
  const auto p3 = projective_space(3);
  EXPECT_EQ(p3->name(), "P3");
  EXPECT_EQ(p3->pow(p3->element("h"), 3), p3->element("pt"));
  EXPECT_TRUE(p3->is_zero(p3->pow(p3->element("h"), 4)));
  EXPECT_EQ(p3->integrate(p3->element("pt")), 1);
  EXPECT_EQ(p3->format(p3->parse("1 + 4*h + h*h")), "1 + 4*h + h2");
  const auto id = projective_space_with_identity(2);
  EXPECT_EQ(id->pushforward_target().name(), "P2");
}

TEST(StructRing, InverseAndComponents) {
  const auto bl = blowup_p2_at_point();
  const auto c = bl->parse("1 + 4*h + 4*P");
  EXPECT_EQ(bl->mul(c, bl->inverse(c)), bl->one());
  EXPECT_EQ(bl->format(bl->inverse(c)), "1 - 4*h + 12*P");
  EXPECT_EQ(bl->component(c, 1), bl->element("h", 4));
  EXPECT_THROW(bl->inverse(bl->parse("2 + h")), NonUnitError);
}

TEST(StructRing, RejectsBadTables) {
  using B = StructRing::Basis;
  const std::vector<B> basis{{"1", 0}, {"a", 1}, {"b", 2}};
  // a*a = a is not homogeneous
  EXPECT_THROW(StructRing("bad", basis, {{1, 1, StructElement{{0, 1, 0}}}}, {0, 0, 1}), ValidationError);
  // integral outside the top degree
  EXPECT_THROW(StructRing("bad", basis, {}, {0, 1, 1}), ValidationError);
  // two units
  EXPECT_THROW(StructRing("bad", {{"1", 0}, {"u", 0}}, {}, {1, 0}), ValidationError);
  // conflicting a*b entries
  const std::vector<B> b3{{"1", 0}, {"a", 1}, {"c", 1}, {"p", 2}};
  EXPECT_THROW(StructRing("bad", b3,
                          {{1, 2, StructElement{{0, 0, 0, 1}}}, {2, 1, StructElement{{0, 0, 0, 2}}}},
                          {0, 0, 0, 1}),
               ValidationError);
}

TEST(StructRing, RejectsNonAssociativeTable) {
  using B = StructRing::Basis;
  // (a*a)*c = p but a*(a*c) = 0
  const std::vector<B> basis{{"1", 0}, {"a", 1}, {"c", 1}, {"q", 2}, {"p", 3}};
  const std::vector<StructRing::Product> products{
      {1, 1, StructElement{{0, 0, 0, 1, 0}}},  // a*a = q
      {1, 2, StructElement{{0, 0, 0, 0, 0}}},  // a*c = 0
      {3, 2, StructElement{{0, 0, 0, 0, 1}}},  // q*c = p
  };
  EXPECT_THROW(StructRing("bad", basis, products, {0, 0, 0, 0, 1}), ValidationError);
}

TEST(StructRingLoader, ReadsRingsWithPushforward) {
  std::istringstream in(R"(# comment
ring line
basis 1:0 pt:1
integral pt = 1
end
ring two_points   # line blown up nowhere, relabelled
basis 1:0 q:1
integral q = 2
pushforward line
push 1 = 1
push q = 2*pt
end
)");
  RingLibrary lib;
  EXPECT_EQ(load_struct_rings(in, lib), (std::vector<std::string>{"line", "two_points"}));
  const auto r = lib.find("two_points");
  EXPECT_EQ(r->integrate(r->element("q")), 2);
  EXPECT_EQ(r->pushforward(r->element("q")), lib.find("line")->element("pt", 2));
  EXPECT_EQ(lib.find("BlP2")->name(), "BlP2");
  EXPECT_EQ(lib.find("P4")->top_degree(), 4);
  EXPECT_THROW(lib.find("nowhere"), ValidationError);
}

TEST(StructRingLoader, ErrorsCarryLineNumbers) {
  auto line_of = [](const char* text) -> std::size_t {
    std::istringstream in(text);
    RingLibrary lib;
    try {
      load_struct_rings(in, lib);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("ring a\nbasis 1:0 h:1\nmul h h = w\nend\n"), 3u);
  EXPECT_EQ(line_of("ring a\nbasis 1:0 h:x\nend\n"), 2u);
  EXPECT_EQ(line_of("ring a\nbasis 1:0 h:1\nfrobnicate\nend\n"), 3u);
  EXPECT_EQ(line_of("ring a\nbasis 1:0 h:1\nintegral h = 1\n"), 1u);
  EXPECT_EQ(line_of("ring a\nbasis 1:0 h:1\nintegral h = 1\npushforward P1\npush 1 = 1\nend\n"), 4u);
}
