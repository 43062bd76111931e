#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace secgame {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using VectorXr = VectorX<Rational>;
using MatrixXr = MatrixX<Rational>;

/** Malformed input document, payload, or request (CLI exit code 2). */
class InputError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/** A computation that should always succeed did not (CLI exit code 3). */
class InternalError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/** A requested search exceeds its configured size budget. */
class BudgetExceeded : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/**
 * Parse an exact rational from an optionally signed decimal ("-0.75")
 * or fraction ("3/4") literal.  Throws InputError on anything else.
 */
Rational parse_rational(std::string_view text);

/** "p/q" in lowest terms, or "p" for integers. */
std::string format_rational(const Rational& q);

double to_double(const Rational& q);

Integer numerator_of(const Rational& q);
Integer denominator_of(const Rational& q);

VectorXr make_vector(const std::vector<Rational>& values);
std::vector<Rational> to_std_vector(const VectorXr& v);

}   // namespace secgame
