#include "dyckfact/rational.hpp"

#include <cctype>
#include <ostream>

namespace dyckfact {

namespace {

void require_nonzero_den(const Int& den) {
    if (sgn(den) == 0) throw domain_error("rational with zero denominator");
}

} // namespace

Rat::Rat(long num, long den) {
    require_nonzero_den(Int(den));
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat::Rat(const Int& num, const Int& den) {
    require_nonzero_den(den);
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::parse(std::string_view s) {
    auto is_int = [](std::string_view t) {
        if (!t.empty() && (t.front() == '+' || t.front() == '-')) t.remove_prefix(1);
        if (t.empty()) return false;
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view nums = s, dens = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        nums = s.substr(0, slash);
        dens = s.substr(slash + 1);
    }
    if (!is_int(nums) || !is_int(dens))
        throw parse_error("not a rational: '" + std::string(s) + "'");
    if (nums.front() == '+') nums.remove_prefix(1); // mpz rejects a leading '+'
    if (dens.front() == '+') dens.remove_prefix(1);
    Int num(std::string(nums), 10);
    Int den(std::string(dens), 10);
    if (sgn(den) == 0) throw parse_error("zero denominator: '" + std::string(s) + "'");
    return Rat(num, den);
}

std::string Rat::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

} // namespace dyckfact
