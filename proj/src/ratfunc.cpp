#include "narayana/ratfunc.hpp"

namespace narayana {

void RatFunc::reduce() {
    if (den_.is_zero()) throw ZeroDenominator("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = IntPoly::one();
        return;
    }
    IntPoly g = poly_gcd(num_, den_);
    num_ = num_.div_exact(g);
    den_ = den_.div_exact(g);
    BigInt cg = boost::multiprecision::gcd(num_.content(), den_.content());
    if (den_.leading() < 0) cg = -cg;
    num_ = num_.div_scalar_exact(cg);
    den_ = den_.div_scalar_exact(cg);
}

}  // namespace narayana
