#pragma once

#include <vector>

#include "singchar/vec.hpp"

namespace singchar {

/** Point on the unit torus R^d/Z^d, d in {1,2}; coordinates reduced to [0,1). */
class TorusPoint {
public:
    TorusPoint() = default;
    explicit TorusPoint(const Vec& lift) : c_(reduce(lift)) {}
    static TorusPoint of(double x) { return TorusPoint(Vec::of(x)); }
    static TorusPoint of(double x, double y) { return TorusPoint(Vec::of(x, y)); }

    int dim() const { return c_.dim(); }
    double operator[](int i) const { return c_[i]; }
    /** Canonical lift: the representative in [0,1)^d. */
    const Vec& lift() const { return c_; }

    static Vec reduce(Vec x) {
        for (int i = 0; i < x.dim(); ++i) {
            double r = x[i] - std::floor(x[i]);
            if (r >= 1.0) r -= 1.0;  // guard against floor rounding at integers
            x[i] = r;
        }
        return x;
    }

private:
    Vec c_;
};

/** Shortest distance on the flat torus: min over integer shifts of the Euclidean
    distance between lifts. Symmetric, bounded by sqrt(d)/2. */
double torusDistance(const TorusPoint& a, const TorusPoint& b);

/** Per-axis wrapped difference a - b mapped to [-1/2, 1/2). */
Vec wrappedDelta(const TorusPoint& a, const TorusPoint& b);

/** Lift of `target` closest to the canonical lift of `base`. Ties (distance exactly
    1/2 on an axis) resolve to the lift on the positive side of base. */
Vec nearestLift(const TorusPoint& base, const TorusPoint& target);

/** Same, but relative to an arbitrary real base point. */
Vec nearestLiftTo(const Vec& base_lift, const TorusPoint& target);

/** Regular lattice {i/n} per axis. Nodes are indexed row-major. */
class Grid {
public:
    Grid(int dim, int n0, int n1 = 0);
    static Grid line(int n) { return Grid(1, n); }
    static Grid square(int n) { return Grid(2, n, n); }

    int dim() const { return dim_; }
    int resolution(int axis) const { return axis == 0 ? n0_ : n1_; }
    int size() const { return dim_ == 1 ? n0_ : n0_ * n1_; }
    double spacing(int axis) const { return 1.0 / resolution(axis); }
    double maxSpacing() const;

    TorusPoint node(int flat) const;
    int flatIndex(int i, int j = 0) const { return dim_ == 1 ? i : i * n1_ + j; }
    /** Node with the given per-axis indices taken modulo the resolution. */
    int wrapIndex(int i, int j = 0) const;
    /** Flat index of the grid node nearest to x. */
    int nearestNode(const TorusPoint& x) const;

    bool operator==(const Grid& o) const {
        return dim_ == o.dim_ && n0_ == o.n0_ && n1_ == o.n1_;
    }

private:
    int dim_, n0_, n1_;
};

} // namespace singchar
