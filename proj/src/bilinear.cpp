#include "gdbialg/bilinear.hpp"

#include <stdexcept>

namespace gdbialg {

Vector BilinearMap::basis_image(std::size_t i, std::size_t j) const {
    Vector v(out_);
    for (std::size_t k = 0; k < out_; ++k) v[k] = at(i, j, k);
    return v;
}

Vector BilinearMap::eval(const Vector& u, const Vector& v) const {
    if (u.dim() != in1_ || v.dim() != in2_)
        throw std::invalid_argument("BilinearMap::eval: dimension mismatch");
    Vector out(out_);
    for (std::size_t i = 0; i < in1_; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < in2_; ++j) {
            if (v[j].is_zero()) continue;
            Scalar uv = u[i] * v[j];
            for (std::size_t k = 0; k < out_; ++k) {
                const Scalar& c = at(i, j, k);
                if (!c.is_zero()) out[k] += uv * c;
            }
        }
    }
    return out;
}

bool BilinearMap::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace gdbialg
