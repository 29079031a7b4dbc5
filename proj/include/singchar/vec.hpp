#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace singchar {

/** Small dense vector for d = 1 or 2, used for points, tangents and momenta. */
class Vec {
public:
    Vec() : n_(0), c_{0.0, 0.0} {}
    explicit Vec(int dim, double fill = 0.0) : n_(dim), c_{fill, fill} {
        if (dim < 1 || dim > 2) throw std::invalid_argument("Vec: dim must be 1 or 2");
    }
    static Vec of(double x) { Vec v(1); v.c_[0] = x; return v; }
    static Vec of(double x, double y) { Vec v(2); v.c_[0] = x; v.c_[1] = y; return v; }

    int dim() const { return n_; }
    double& operator[](int i) { return c_[static_cast<size_t>(i)]; }
    double operator[](int i) const { return c_[static_cast<size_t>(i)]; }

    Vec& operator+=(const Vec& o) { for (int i = 0; i < n_; ++i) c_[i] += o.c_[i]; return *this; }
    Vec& operator-=(const Vec& o) { for (int i = 0; i < n_; ++i) c_[i] -= o.c_[i]; return *this; }
    Vec& operator*=(double s) { for (int i = 0; i < n_; ++i) c_[i] *= s; return *this; }

    friend Vec operator+(Vec a, const Vec& b) { a += b; return a; }
    friend Vec operator-(Vec a, const Vec& b) { a -= b; return a; }
    friend Vec operator*(double s, Vec a) { a *= s; return a; }
    friend Vec operator*(Vec a, double s) { a *= s; return a; }
    friend Vec operator-(Vec a) { a *= -1.0; return a; }

    double dot(const Vec& o) const {
        double s = 0.0;
        for (int i = 0; i < n_; ++i) s += c_[i] * o.c_[i];
        return s;
    }
    double norm2() const { return dot(*this); }
    double norm() const { return std::sqrt(norm2()); }

    bool finite() const {
        for (int i = 0; i < n_; ++i)
            if (!std::isfinite(c_[i])) return false;
        return true;
    }

private:
    int n_;
    std::array<double, 2> c_;
};

inline double distance(const Vec& a, const Vec& b) { return (a - b).norm(); }

} // namespace singchar
