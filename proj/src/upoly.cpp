#include "parehr/upoly.hpp"

#include <sstream>

namespace parehr {

UPoly up_trim(UPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

int up_degree(const UPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (!p[i].is_zero()) return i;
    return -1;
}

UPoly up_add(UPoly a, const UPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
}

UPoly up_mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

UPoly up_scale(UPoly p, const Rational& c) {
    for (auto& x : p) x *= c;
    return p;
}

UPoly up_pow(const UPoly& p, unsigned k) {
    UPoly r{Rational(1)};
    for (unsigned i = 0; i < k; ++i) r = up_mul(r, p);
    return r;
}

Rational up_eval(const UPoly& p, const Rational& x) {
    Rational acc(0);
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) acc = acc * x + p[i];
    return acc;
}

std::string up_str(const UPoly& p, const std::string& var) {
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
        if (p[i].is_zero()) continue;
        const Rational mag = p[i].abs();
        if (first) {
            if (p[i].sign() < 0) os << "-";
            first = false;
        } else {
            os << (p[i].sign() < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << mag.str();
        } else {
            if (!mag.is_one()) os << mag.str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return first ? "0" : os.str();
}

}  // namespace parehr
