#pragma once

#include "mcgcert/cyclotomic.hpp"

#include <compare>
#include <string>

namespace mcgcert {

// Quaternion with cyclotomic coordinates. Group elements always have exact
// unit norm; this is checked when models are built, not here.
struct Quaternion {
    Cyclotomic w, x, y, z;

    static Quaternion one() { return {Cyclotomic::one(), {}, {}, {}}; }

    // Hamilton product, i*j = k.
    Quaternion operator*(const Quaternion& o) const {
        return {w * o.w - x * o.x - y * o.y - z * o.z,
                w * o.x + x * o.w + y * o.z - z * o.y,
                w * o.y - x * o.z + y * o.w + z * o.x,
                w * o.z + x * o.y - y * o.x + z * o.w};
    }

    Quaternion operator-() const { return {-w, -x, -y, -z}; }

    Quaternion conjugate() const { return {w, -x, -y, -z}; }

    Cyclotomic norm() const { return w * w + x * x + y * y + z * z; }

    bool operator==(const Quaternion& o) const = default;
    std::strong_ordering operator<=>(const Quaternion& o) const = default;

    std::string to_string() const {
        return "(" + w.to_string() + ", " + x.to_string() + ", " + y.to_string() + ", " +
               z.to_string() + ")";
    }
};

}  // namespace mcgcert
