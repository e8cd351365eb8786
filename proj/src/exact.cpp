#include "psb/exact.hpp"

namespace psb {

Rat::Rat(long num, long den) {
    if (den == 0) throw arithmetic_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw arithmetic_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat::Rat(const mpq_class& q) : v_(q) {
    v_.canonicalize();
}

Rat Rat::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rat(mpz_class(text), mpz_class(1));
    return Rat(mpz_class(text.substr(0, slash)), mpz_class(text.substr(slash + 1)));
}

Rat Rat::operator/(const Rat& o) const {
    if (o.is_zero()) throw arithmetic_error("rational division by zero");
    return Rat(mpq_class(v_ / o.v_));
}

std::string Rat::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

namespace {

void append_mpz_key(std::string& out, const mpz_class& z) {
    int s = sgn(z);
    out.push_back(static_cast<char>(s + 1));
    if (s == 0) {
        out.append(4, '\0');
        return;
    }
    size_t bytes = (mpz_sizeinbase(z.get_mpz_t(), 2) + 7) / 8;
    uint32_t len = static_cast<uint32_t>(bytes);
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((len >> (8 * i)) & 0xff));
    size_t off = out.size();
    out.resize(off + bytes);
    size_t count = 0;
    mpz_export(&out[off], &count, -1, 1, 0, 0, z.get_mpz_t());
}

}  // namespace

void Rat::append_key(std::string& out) const {
    append_mpz_key(out, v_.get_num());
    append_mpz_key(out, v_.get_den());
}

Quad Quad::operator*(const Quad& o) const {
    return Quad(r_ * o.r_ + Rat(3) * s_ * o.s_, r_ * o.s_ + s_ * o.r_);
}

Quad Quad::inverse() const {
    if (is_zero()) throw arithmetic_error("inverse of zero in Q[sqrt3]");
    Rat n = norm();  // nonzero: sqrt(3) is irrational
    return Quad(r_ / n, -(s_ / n));
}

Quad Quad::operator/(const Quad& o) const {
    if (o.is_zero()) throw arithmetic_error("division by zero in Q[sqrt3]");
    return *this * o.inverse();
}

int Quad::sign() const {
    int sr = r_.sign(), ss = s_.sign();
    if (ss == 0) return sr;
    if (sr == 0) return ss;
    if (sr == ss) return sr;
    // Opposite signs: compare r^2 against 3 s^2.
    int c = (r_ * r_).cmp(Rat(3) * s_ * s_);
    if (c == 0) throw arithmetic_error("r^2 == 3 s^2 with nonzero components");
    return c > 0 ? sr : ss;
}

void Quad::append_key(std::string& out) const {
    r_.append_key(out);
    s_.append_key(out);
}

std::string Quad::key() const {
    std::string out;
    out.reserve(32);
    append_key(out);
    return out;
}

std::string Quad::str() const {
    if (s_.is_zero()) return r_.str();
    std::string st = s_.abs() == Rat(1) ? "r3" : s_.abs().str() + "*r3";
    if (r_.is_zero()) return (s_.sign() < 0 ? "-" : "") + st;
    return r_.str() + (s_.sign() < 0 ? "-" : "+") + st;
}

std::string Quad::decimal(int digits) const {
    mpz_class p = mpz_class(10);
    mpz_pow_ui(p.get_mpz_t(), p.get_mpz_t(), digits);
    // Guard digits sized to |s| so the truncated value is correct to 1 ulp.
    int guard = 12 + static_cast<int>(mpz_sizeinbase(s_.num().get_mpz_t(), 10));
    mpz_class s3 = sqrt3_scaled(digits + guard);
    mpz_class gp = mpz_class(10);
    mpz_pow_ui(gp.get_mpz_t(), gp.get_mpz_t(), guard);
    mpq_class total = r_.mpq() * p + s_.mpq() * s3 / gp;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), total.get_num().get_mpz_t(), total.get_den().get_mpz_t());
    bool neg = fl < 0;
    mpz_class a = ::abs(fl);
    std::string ds = a.get_str();
    if (static_cast<int>(ds.size()) <= digits) ds.insert(0, digits + 1 - ds.size(), '0');
    ds.insert(ds.size() - digits, ".");
    return (neg ? "-" : "") + ds;
}

mpz_class sqrt3_scaled(int digits) {
    mpz_class p = mpz_class(10);
    mpz_pow_ui(p.get_mpz_t(), p.get_mpz_t(), digits);
    mpz_class t = 3 * p * p;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), t.get_mpz_t());
    return r;
}

}  // namespace psb
