#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fujiki {

// A permutation of {0, ..., degree-1} stored as its image table:
// img[i] is the image of point i.  Composition, comparison and hashing
// all work directly on the image vector, so the lexicographic order on
// permutations of equal degree is the lexicographic order on images.
struct Perm {
    std::vector<uint8_t> img;

    Perm() = default;
    explicit Perm(std::vector<uint8_t> images) : img(std::move(images)) {}

    int degree() const { return static_cast<int>(img.size()); }
    uint8_t operator[](int i) const { return img[static_cast<size_t>(i)]; }

    bool operator==(const Perm& o) const { return img == o.img; }
    bool operator!=(const Perm& o) const { return img != o.img; }
    bool operator<(const Perm& o) const { return img < o.img; }
};

// Identity permutation of the given degree.
Perm identity_perm(int degree);

// compose(p, q) applies q first, then p: result[i] = p[q[i]].
Perm compose(const Perm& p, const Perm& q);

Perm invert(const Perm& p);

// conjugate(g, h) = h o g o h^-1.
Perm conjugate(const Perm& g, const Perm& h);

// Multiplicative order (lcm of cycle lengths).
long perm_order(const Perm& p);

bool is_identity(const Perm& p);

// Parses disjoint cycle notation, e.g. "Permutation(7)(0,4)(2,6)" or
// "(0,1,2)(3,4)".  The "Permutation" prefix is optional, whitespace is
// ignored, singleton cycles are accepted anywhere and fix their point.
// Throws std::invalid_argument on malformed input, repeated points, or
// points outside [0, degree).
Perm parse_permutation(const std::string& text, int degree);

// Formats in compact cycle notation with a "Permutation" prefix.  Cycles
// start at their smallest point and are sorted by that point.  When the
// largest point of the domain is fixed, it is printed first as a singleton
// marker so the degree stays recoverable, e.g. "Permutation(7)(0,4)(2,6)";
// the identity of degree n prints as "Permutation(n-1)".
std::string format_permutation(const Perm& p);

struct PermHash {
    size_t operator()(const Perm& p) const {
        // FNV-1a over the image bytes
        size_t h = 1469598103934665603ull;
        for (uint8_t b : p.img) {
            h ^= b;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace fujiki
