#pragma once

#include "gdbialg/linalg.hpp"

#include <cstddef>
#include <vector>

namespace gdbialg {

// Bilinear map as a rank-3 structure-constant tensor:
//   m(e_i, e_j) = sum_k c[i][j][k] e_k,  dims (in1, in2, out).
class BilinearMap {
public:
    BilinearMap() : in1_(0), in2_(0), out_(0) {}
    BilinearMap(std::size_t in1, std::size_t in2, std::size_t out)
        : in1_(in1), in2_(in2), out_(out), c_(in1 * in2 * out) {}

    static BilinearMap zero(std::size_t in1, std::size_t in2, std::size_t out) {
        return BilinearMap(in1, in2, out);
    }

    std::size_t in1() const { return in1_; }
    std::size_t in2() const { return in2_; }
    std::size_t out() const { return out_; }

    const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * in2_ + j) * out_ + k];
    }
    Scalar& at(std::size_t i, std::size_t j, std::size_t k) {
        return c_[(i * in2_ + j) * out_ + k];
    }

    // m(e_i, e_j) as a vector in the output space.
    Vector basis_image(std::size_t i, std::size_t j) const;

    // Exact bilinear evaluation; throws on dimension mismatch.
    Vector eval(const Vector& u, const Vector& v) const;

    bool is_zero() const;

    friend bool operator==(const BilinearMap& a, const BilinearMap& b) {
        return a.in1_ == b.in1_ && a.in2_ == b.in2_ && a.out_ == b.out_ && a.c_ == b.c_;
    }
    friend bool operator!=(const BilinearMap& a, const BilinearMap& b) { return !(a == b); }

private:
    std::size_t in1_, in2_, out_;
    std::vector<Scalar> c_;
};

}  // namespace gdbialg
