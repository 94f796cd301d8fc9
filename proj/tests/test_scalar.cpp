#include <catch_amalgamated.hpp>

#include "qi/error.hpp"
#include "qi/scalar.hpp"

using namespace qi;

TEST_CASE("rational arithmetic is exact") {
  Field q = Field::rational();
  Scalar a = q.parse_scalar("1/3"), b = q.parse_scalar("1/6");
  CHECK(a + b == q.parse_scalar("1/2"));
  CHECK((a - b).to_string() == "1/6");
  CHECK(a * b == q.parse_scalar("1/18"));
  CHECK(a / b == q.from_int(2));
  CHECK(q.parse_scalar("4/6").to_string() == "2/3");
  CHECK_THROWS_AS(a / q.zero(), ArithmeticError);
}

TEST_CASE("prime field arithmetic") {
  Field f = Field::parse("fp:7");
  CHECK(f.modulus() == 7);
  CHECK(f.from_int(-1).residue() == 6);
  CHECK((f.from_int(3) * f.from_int(5)).residue() == 1);
  CHECK(f.from_int(3).inverse() == f.from_int(5));
  CHECK(f.parse_scalar("1/2") == f.from_int(4));
  CHECK(f.from_int(2).pow(3) == f.one());
  CHECK_THROWS_AS(f.parse_scalar("1/7"), ArithmeticError);
  CHECK_THROWS_AS(f.zero().inverse(), ArithmeticError);
}

TEST_CASE("field parsing and validation") {
  CHECK(Field::parse("rational").is_rational());
  CHECK(Field::parse("fp:2147483647").modulus() == 2147483647U);
  CHECK_THROWS_AS(Field::parse("fp:2"), PreconditionError);
  CHECK_THROWS_AS(Field::parse("fp:9"), PreconditionError);
  CHECK_THROWS_AS(Field::parse("fp:x"), SchemaError);
  CHECK_THROWS_AS(Field::parse("real"), SchemaError);
  CHECK_THROWS_AS(Field::rational().parse_scalar("abc"), SchemaError);
}

TEST_CASE("mixing fields is rejected") {
  Field q = Field::rational(), f = Field::prime(5), g = Field::prime(7);
  CHECK_THROWS_AS(q.one() + f.one(), PreconditionError);
  CHECK_THROWS_AS(f.one() * g.one(), PreconditionError);
  CHECK(f.convert(q.parse_scalar("3/2")) == f.from_int(4));
  CHECK_THROWS_AS(q.convert(f.one()), PreconditionError);
}

TEST_CASE("large residues do not overflow") {
  Field f = Field::prime(2147483647U);
  Scalar a = f.from_int(2147483646LL);
  CHECK(a * a == f.one());
  CHECK((a + a).residue() == 2147483645U);
}
