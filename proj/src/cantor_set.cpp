#include "cantor/cantor_set.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cantor {

CantorSet CantorSet::create(int64_t base, std::vector<int64_t> digits) {
    if (base < 3) throw std::invalid_argument("base must be >= 3");
    if (base > 1'000'000) throw std::invalid_argument("base too large");
    std::sort(digits.begin(), digits.end());
    if (digits.size() < 2) throw std::invalid_argument("need at least 2 digits");
    if (static_cast<int64_t>(digits.size()) >= base)
        throw std::invalid_argument("need |D| < base");
    for (size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] < 0 || digits[i] >= base)
            throw std::invalid_argument("digit out of range [0, base)");
        if (i > 0 && digits[i] == digits[i - 1])
            throw std::invalid_argument("duplicate digit");
    }
    CantorSet c;
    c.base = base;
    c.digits = std::move(digits);
    int64_t g = 0;
    for (size_t i = 1; i < c.digits.size(); ++i)
        g = std::gcd(g, c.digits[i] - c.digits[0]);
    c.step = g;
    c.dim = std::log(static_cast<double>(c.digits.size())) / std::log(static_cast<double>(base));
    return c;
}

CantorSet CantorSet::parse(const std::string& text) {
    // "b=3;D=0,2"
    int64_t base = 0;
    std::vector<int64_t> digits;
    std::stringstream ss(text);
    std::string part;
    bool saw_b = false, saw_d = false;
    while (std::getline(ss, part, ';')) {
        auto eq = part.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad cantor spec: " + text);
        std::string key = part.substr(0, eq);
        std::string val = part.substr(eq + 1);
        if (key == "b") {
            base = std::stoll(val);
            saw_b = true;
        } else if (key == "D") {
            std::stringstream ds(val);
            std::string item;
            while (std::getline(ds, item, ','))
                digits.push_back(std::stoll(item));
            saw_d = true;
        } else {
            throw std::invalid_argument("unknown key in cantor spec: " + key);
        }
    }
    if (!saw_b || !saw_d) throw std::invalid_argument("cantor spec needs b= and D=: " + text);
    return create(base, std::move(digits));
}

std::string CantorSet::format() const {
    std::ostringstream os;
    os << "b=" << base << ";D=";
    for (size_t i = 0; i < digits.size(); ++i) {
        if (i) os << ',';
        os << digits[i];
    }
    return os.str();
}

int CantorSet::digit_index(int64_t d) const {
    auto it = std::lower_bound(digits.begin(), digits.end(), d);
    if (it == digits.end() || *it != d) return -1;
    return static_cast<int>(it - digits.begin());
}

ElementScanner::ElementScanner(const CantorSet& set, const BigInt& start) : set_(&set), n_(start) {
    if (start < 0) throw std::invalid_argument("index must be nonnegative");
    const int64_t radix = set.radix();
    if (set.zero_digit()) {
        BigInt n = start;
        while (n > 0) {
            idx_.push_back(static_cast<int32_t>(n % radix));
            n /= radix;
        }
    } else {
        // bijective numeration of start+1 with digits 1..|D|, stored as digit-1
        BigInt n = start + 1;
        while (n > 0) {
            BigInt d = n % radix;
            if (d == 0) {
                idx_.push_back(static_cast<int32_t>(radix - 1));
                n = n / radix - 1;
            } else {
                idx_.push_back(static_cast<int32_t>(d) - 1);
                n /= radix;
            }
        }
    }
    for (int32_t i : idx_) sum_digits_ += set.digits[i];
}

const std::vector<ElementScanner::Change>& ElementScanner::advance() {
    changes_.clear();
    n_ += 1;
    const int32_t top = static_cast<int32_t>(set_->radix()) - 1;
    size_t pos = 0;
    while (pos < idx_.size() && idx_[pos] == top) {
        changes_.push_back({static_cast<int32_t>(pos), top, 0});
        sum_digits_ += set_->digits[0] - set_->digits[top];
        idx_[pos] = 0;
        ++pos;
    }
    if (pos < idx_.size()) {
        int32_t old = idx_[pos];
        idx_[pos] = old + 1;
        changes_.push_back({static_cast<int32_t>(pos), old, old + 1});
        sum_digits_ += set_->digits[old + 1] - set_->digits[old];
    } else {
        // new most-significant position: digit 1 when counting positionally
        // (0 in D), lowest digit when counting bijectively
        int32_t fresh = set_->zero_digit() ? 1 : 0;
        idx_.push_back(fresh);
        changes_.push_back({static_cast<int32_t>(pos), -1, fresh});
        sum_digits_ += set_->digits[fresh];
    }
    return changes_;
}

BigInt ElementScanner::value() const {
    BigInt v = 0;
    for (size_t c = idx_.size(); c-- > 0;) {
        v *= set_->base;
        v += set_->digits[idx_[c]];
    }
    return v;
}

ModTracker::ModTracker(const CantorSet& set, uint64_t modulus) : set_(&set), q_(modulus) {
    if (modulus == 0) throw std::invalid_argument("modulus must be positive");
    if (modulus >= (uint64_t(1) << 62)) throw std::invalid_argument("modulus too large");
}

uint64_t ModTracker::contribution(int pos, int digit_index) {
    while (static_cast<int>(pow_.size()) <= pos) {
        uint64_t prev = pow_.empty() ? 1 % q_ : pow_.back();
        uint64_t next = pow_.empty() ? 1 % q_ : mulmod_u64(prev, static_cast<uint64_t>(set_->base) % q_, q_);
        pow_.push_back(next);
        std::vector<uint64_t> row(set_->digits.size());
        for (size_t i = 0; i < row.size(); ++i)
            row[i] = mulmod_u64(static_cast<uint64_t>(set_->digits[i]) % q_, next, q_);
        contrib_.push_back(std::move(row));
    }
    return contrib_[pos][digit_index];
}

void ModTracker::init(const ElementScanner& scan) {
    residue_ = 0;
    const auto& idx = scan.digit_indices();
    for (size_t c = 0; c < idx.size(); ++c)
        residue_ = (residue_ + contribution(static_cast<int>(c), idx[c])) % q_;
}

void ModTracker::apply(const ElementScanner::Change& ch) {
    uint64_t add = contribution(ch.pos, ch.to);
    uint64_t sub = ch.from >= 0 ? contribution(ch.pos, ch.from) : 0;
    residue_ = (residue_ + add + q_ - sub) % q_;
}

ValueTracker::ValueTracker(const CantorSet& set) : set_(&set) {}

const BigInt& ValueTracker::power(int pos) {
    while (static_cast<int>(pow_.size()) <= pos)
        pow_.push_back(pow_.empty() ? BigInt(1) : BigInt(pow_.back() * set_->base));
    return pow_[pos];
}

void ValueTracker::init(const ElementScanner& scan) {
    value_ = 0;
    const auto& idx = scan.digit_indices();
    for (size_t c = 0; c < idx.size(); ++c)
        value_ += set_->digits[idx[c]] * power(static_cast<int>(c));
}

void ValueTracker::apply(const ElementScanner::Change& ch) {
    int64_t from = ch.from >= 0 ? set_->digits[ch.from] : 0;
    int64_t to = set_->digits[ch.to];
    value_ += (to - from) * power(ch.pos);
}

}  // namespace cantor
