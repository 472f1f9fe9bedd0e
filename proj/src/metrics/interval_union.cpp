#include "vanet/metrics/interval_union.hpp"

#include <algorithm>
#include <stdexcept>

namespace vanet::metrics {

double IntervalUnion::run_length(double a, double b, double lo, double hi) {
    const double x = std::max(a, lo), y = std::min(b, hi);
    return y > x ? y - x : 0.0;
}

void IntervalUnion::settle(const Iv& iv) {
    watermark_ = iv.first;
    if (open_ && iv.first <= run_hi_) {
        run_hi_ = std::max(run_hi_, iv.second);
        return;
    }
    if (open_) closed_ += run_length(run_lo_, run_hi_, lo_, hi_);
    run_lo_ = iv.first;
    run_hi_ = iv.second;
    open_ = true;
}

void IntervalUnion::add(double start, double end) {
    if (!(end > start)) return;
    if (start < watermark_) throw std::logic_error("interval arrived later than the union's lag allows");
    pending_.emplace(start, end);
    latest_start_ = std::max(latest_start_, start);
    while (!pending_.empty() && pending_.top().first < latest_start_ - lag_) {
        settle(pending_.top());
        pending_.pop();
    }
}

double IntervalUnion::measure() const {
    auto rest = pending_;
    double total = closed_;
    bool open = open_;
    double a = run_lo_, b = run_hi_;
    while (!rest.empty()) {
        const Iv iv = rest.top();
        rest.pop();
        if (open && iv.first <= b) {
            b = std::max(b, iv.second);
            continue;
        }
        if (open) total += run_length(a, b, lo_, hi_);
        a = iv.first;
        b = iv.second;
        open = true;
    }
    if (open) total += run_length(a, b, lo_, hi_);
    return total;
}

}  // namespace vanet::metrics
