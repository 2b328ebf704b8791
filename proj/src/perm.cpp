#include "fujiki/perm.hpp"

#include <cassert>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace fujiki {

Perm identity_perm(int degree) {
    assert(degree >= 0 && degree <= 255);
    Perm p;
    p.img.resize(static_cast<size_t>(degree));
    for (int i = 0; i < degree; ++i) p.img[static_cast<size_t>(i)] = static_cast<uint8_t>(i);
    return p;
}

Perm compose(const Perm& p, const Perm& q) {
    assert(p.degree() == q.degree());
    Perm r;
    r.img.resize(p.img.size());
    for (size_t i = 0; i < q.img.size(); ++i) r.img[i] = p.img[q.img[i]];
    return r;
}

Perm invert(const Perm& p) {
    Perm r;
    r.img.resize(p.img.size());
    for (size_t i = 0; i < p.img.size(); ++i) r.img[p.img[i]] = static_cast<uint8_t>(i);
    return r;
}

Perm conjugate(const Perm& g, const Perm& h) {
    return compose(compose(h, g), invert(h));
}

long perm_order(const Perm& p) {
    long ord = 1;
    std::vector<bool> seen(p.img.size(), false);
    for (size_t i = 0; i < p.img.size(); ++i) {
        if (seen[i]) continue;
        long len = 0;
        size_t j = i;
        do {
            seen[j] = true;
            j = p.img[j];
            ++len;
        } while (j != i);
        ord = std::lcm(ord, len);
    }
    return ord;
}

bool is_identity(const Perm& p) {
    for (size_t i = 0; i < p.img.size(); ++i)
        if (p.img[i] != i) return false;
    return true;
}

Perm parse_permutation(const std::string& text, int degree) {
    if (degree < 0 || degree > 255) throw std::invalid_argument("degree out of range");
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    const std::string prefix = "Permutation";
    if (text.compare(pos, prefix.size(), prefix) == 0) pos += prefix.size();
    skip_ws();

    Perm p = identity_perm(degree);
    std::vector<bool> used(static_cast<size_t>(degree), false);
    bool any_cycle = false;

    auto parse_point = [&]() -> int {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw std::invalid_argument("expected a point in: " + text);
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 255) throw std::invalid_argument("point too large in: " + text);
            ++pos;
        }
        if (v >= degree) throw std::invalid_argument("point exceeds degree in: " + text);
        if (used[static_cast<size_t>(v)]) throw std::invalid_argument("repeated point in: " + text);
        used[static_cast<size_t>(v)] = true;
        return static_cast<int>(v);
    };

    while (true) {
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] != '(') throw std::invalid_argument("expected '(' in: " + text);
        ++pos;
        any_cycle = true;
        std::vector<int> cycle;
        cycle.push_back(parse_point());
        while (true) {
            skip_ws();
            if (pos >= text.size()) throw std::invalid_argument("unterminated cycle in: " + text);
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            if (text[pos] != ',') throw std::invalid_argument("expected ',' or ')' in: " + text);
            ++pos;
            cycle.push_back(parse_point());
        }
        for (size_t i = 0; i < cycle.size(); ++i) {
            int from = cycle[i];
            int to = cycle[(i + 1) % cycle.size()];
            p.img[static_cast<size_t>(from)] = static_cast<uint8_t>(to);
        }
    }
    if (!any_cycle) throw std::invalid_argument("no cycles in: " + text);
    return p;
}

std::string format_permutation(const Perm& p) {
    std::string out = "Permutation";
    int degree = p.degree();
    if (degree == 0) {
        out += "()";
        return out;
    }
    if (p.img[static_cast<size_t>(degree - 1)] == degree - 1) {
        out += "(" + std::to_string(degree - 1) + ")";
    }
    std::vector<bool> seen(static_cast<size_t>(degree), false);
    for (int i = 0; i < degree; ++i) {
        if (seen[static_cast<size_t>(i)] || p.img[static_cast<size_t>(i)] == i) continue;
        out += "(";
        int j = i;
        bool first = true;
        do {
            if (!first) out += ",";
            out += std::to_string(j);
            seen[static_cast<size_t>(j)] = true;
            j = p.img[static_cast<size_t>(j)];
            first = false;
        } while (j != i);
        out += ")";
    }
    return out;
}

}  // namespace fujiki
