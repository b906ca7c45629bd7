#include "codegraph/threshold_dimension.hpp"

#include <sstream>
#include <stdexcept>

#include "codegraph/metric_dimension.hpp"

namespace codegraph {

namespace {

constexpr long long kSaturated = (1LL << 62);

// 2^e, saturating well above any run length we accept.
long long pow2_sat(long long e) {
    if (e >= 62) return kSaturated;
    return 1LL << e;
}

std::string trace(const std::string& clause, const std::string& param, long long k) {
    std::ostringstream out;
    out << clause << ": " << param << "=" << k;
    return out.str();
}

}  // namespace

bool tau_string_condition(long long s, long long k) {
    if (k < 2) return false;
    return s - k <= pow2_sat(k) - 1;
}

TauResult tau_string(long long s, long long t) {
    if (t < 1) throw std::invalid_argument("tau_string: t must be positive");
    if (s < 3) throw InapplicableInput("tau_string: needs s >= 3");
    TauResult r;
    for (long long k = 2;; ++k) {
        if (tau_string_condition(s, k)) {
            r.value = t - 1 + k;
            r.witness_k = k;
            r.applicable = true;
            r.condition_trace = trace("single-string", "k", k);
            return r;
        }
    }
}

namespace {

TauResult tau_two_strings(const GeneratingCode& code) {
    TauResult r;
    const long long s1 = code.strings[0].zeros, t1 = code.strings[0].ones;
    const long long s2 = code.strings[1].zeros, t2 = code.strings[1].ones;

    // (i) enough fresh isolated vertices taken inside the second zero-run.
    for (long long k1 = 1; k1 <= s2; ++k1) {
        if (s1 + t1 + s2 - k1 <= pow2_sat(k1) - 1) {
            r.value = (t2 - 1) + k1;
            r.witness_k = k1;
            r.applicable = true;
            r.condition_trace = trace("two-string(i)", "k1", k1);
            return r;
        }
    }
    // (ii) first one-run large enough to absorb the whole second zero-run.
    if (t1 >= pow2_sat(s2) - 1) {
        const long long m1 = t1 - (pow2_sat(s2) - 1);
        for (long long k2 = 1; k2 <= s1; ++k2) {
            if (s1 - k2 <= pow2_sat(s2 + k2) - pow2_sat(s2)) {
                r.value = (t2 - 1) + s2 + m1 + k2;
                r.witness_k = k2;
                r.applicable = true;
                r.condition_trace = trace("two-string(ii)", "k2", k2);
                return r;
            }
        }
    } else {
        // (iii) first one-run too small; the shortfall m2 borrows zero-vertices.
        const long long m2 = pow2_sat(s2) - 1 - t1;
        for (long long k2 = 1; k2 <= s1; ++k2) {
            if (s1 - m2 - k2 <= pow2_sat(s2 + k2) - pow2_sat(s2)) {
                r.value = (t2 - 1) + s2 + k2;
                r.witness_k = k2;
                r.applicable = true;
                r.condition_trace = trace("two-string(iii)", "k2", k2);
                return r;
            }
        }
    }
    r.applicable = false;
    r.condition_trace = "two-string: no clause applicable";
    return r;
}

TauResult tau_three_strings(const GeneratingCode& code) {
    TauResult r;
    const long long s1 = code.strings[0].zeros, t1 = code.strings[0].ones;
    const long long s2 = code.strings[1].zeros, t2 = code.strings[1].ones;
    const long long s3 = code.strings[2].zeros, t3 = code.strings[2].ones;

    // (i) fresh isolated vertices inside the final zero-run.
    for (long long k1 = 1; k1 <= s3; ++k1) {
        if (s1 + s2 + s3 + t1 + t2 - k1 <= pow2_sat(k1) - 1) {
            r.value = (t3 - 1) + k1;
            r.witness_k = k1;
            r.applicable = true;
            r.condition_trace = trace("three-string(i)", "k1", k1);
            return r;
        }
    }
    // (ii) the middle one-run covers the final zero-run by itself.
    if (t2 >= pow2_sat(s3) - 1) {
        for (long long k2 = 1; k2 <= s1 + t1 + s2; ++k2) {
            if (s1 + t1 + s2 - k2 <= pow2_sat(s3 + k2) - pow2_sat(s3)) {
                r.value = (t3 - 1) + s3 + (t2 - (pow2_sat(s3) - 1)) + k2;
                r.witness_k = k2;
                r.applicable = true;
                r.condition_trace = trace("three-string(ii)", "k2", k2);
                return r;
            }
        }
    }
    // (iii) first and middle one-runs jointly cover the two last zero-runs.
    if (t2 < pow2_sat(s3) - 1 &&
        t1 - (pow2_sat(s3) - 1 - t2) >= pow2_sat(s2 + s3) - pow2_sat(s3)) {
        for (long long k3 = 1; k3 <= s1 + s2; ++k3) {
            if (s1 + s2 - k3 <= pow2_sat(s3 + k3) - pow2_sat(s3)) {
                r.value = (t3 - 1) + s3 + (t1 + t2 + 1 - pow2_sat(s2 + s3)) + k3;
                r.witness_k = k3;
                r.applicable = true;
                r.condition_trace = trace("three-string(iii)", "k3", k3);
                return r;
            }
        }
    }
    // (iv) both earlier one-runs too small even for the final zero-run.
    if (t1 + t2 < pow2_sat(s3) - 1 && s1 + t1 + s2 + t2 >= pow2_sat(s3) - 1) {
        for (long long k3 = 1; k3 <= s1 + t1 + s2 + t2; ++k3) {
            if (s1 + t1 + s2 + t2 - k3 <= pow2_sat(s3 + k3) - pow2_sat(s3)) {
                r.value = (t3 - 1) + s3 + k3;
                r.witness_k = k3;
                r.applicable = true;
                r.condition_trace = trace("three-string(iv)", "k3", k3);
                return r;
            }
        }
    }
    r.applicable = false;
    r.condition_trace = "three-string: no clause applicable";
    return r;
}

TauResult tau_many_strings(const GeneratingCode& code) {
    TauResult r;
    const int k = code.string_count();
    const long long sk = code.strings[static_cast<size_t>(k - 1)].zeros;
    const long long tk = code.strings[static_cast<size_t>(k - 1)].ones;
    long long sum_s = 0, sum_t_prefix = 0, sum_st_prefix = 0;
    bool all_s_ge_t = true;
    for (int i = 0; i < k; ++i) {
        const CodeString& cs = code.strings[static_cast<size_t>(i)];
        sum_s += cs.zeros;
        if (i < k - 1) {
            sum_t_prefix += cs.ones;
            sum_st_prefix += cs.zeros + cs.ones;
        }
        if (cs.zeros < cs.ones) all_s_ge_t = false;
    }

    // (i) every zero-run at least as long as its one-run; fresh isolated
    // vertices inside the final zero-run.
    if (all_s_ge_t) {
        for (long long k1 = 1; k1 <= sk; ++k1) {
            if (sum_s + sum_t_prefix - k1 <= pow2_sat(k1) - 1) {
                r.value = (tk - 1) + k1;
                r.witness_k = k1;
                r.applicable = true;
                r.condition_trace = trace("many-string(i)", "k1", k1);
                return r;
            }
        }
    }
    // (ii) earlier one-runs too small for the final zero-run, but the whole
    // prefix is long enough.
    if (sum_t_prefix < pow2_sat(sk) - 1 && sum_st_prefix >= pow2_sat(sk) - 1) {
        for (long long rr = 1; rr <= sum_st_prefix; ++rr) {
            if (sum_st_prefix - rr <= pow2_sat(sk + rr) - pow2_sat(sk)) {
                r.value = (tk - 1) + sk + rr;
                r.witness_k = rr;
                r.applicable = true;
                r.condition_trace = trace("many-string(ii)", "r", rr);
                return r;
            }
        }
    }
    r.applicable = false;
    r.condition_trace = "many-string: no clause applicable";
    return r;
}

}  // namespace

TauResult tau_code(const GeneratingCode& code) {
    if (code.strings.empty()) throw std::invalid_argument("tau_code: empty code");
    switch (code.string_count()) {
        case 1: {
            const CodeString& cs = code.strings.front();
            if (cs.zeros < 3) {
                TauResult r;
                r.applicable = false;
                r.condition_trace = "single-string: needs s >= 3";
                return r;
            }
            return tau_string(cs.zeros, cs.ones);
        }
        case 2:
            return tau_two_strings(code);
        case 3:
            return tau_three_strings(code);
        default:
            return tau_many_strings(code);
    }
}

namespace {

// Rewrite one string into a dominating pattern of matched length whose
// threshold realization has small metric dimension.  Bit-dominance (every 1
// stays a 1) makes the result's threshold graph an edge-superset of the
// original's under construction-order identity.
std::vector<CodeString> rewrite_string(const CodeString& cs) {
    const long long s = cs.zeros, t = cs.ones;
    if (s >= 4) {
        std::vector<CodeString> out;
        const long long pairs = (s % 2 == 0) ? s / 2 - 2 : (s - 1) / 2 - 2;
        out.push_back({2, 1});
        for (long long i = 0; i < pairs; ++i) out.push_back({1, 1});
        out.push_back({1, (s % 2 == 0) ? t : t + 1});
        return out;
    }
    if (s == 3) return {{1, 1}, {1, t}};
    return {cs};
}

}  // namespace

GeneratingCode tau_r_rewrite(const GeneratingCode& code) {
    std::vector<CodeString> strings;
    for (const CodeString& cs : code.strings) {
        for (const CodeString& piece : rewrite_string(cs)) strings.push_back(piece);
    }
    // Alternate (2,1) -> (1,2) at even positions within each maximal run of
    // consecutive (2,1) strings; lifts the run's metric dimension growth.
    size_t i = 0;
    while (i < strings.size()) {
        if (strings[i].zeros == 2 && strings[i].ones == 1) {
            size_t run_end = i;
            while (run_end + 1 < strings.size() && strings[run_end + 1].zeros == 2 &&
                   strings[run_end + 1].ones == 1) {
                ++run_end;
            }
            for (size_t j = i + 1; j <= run_end; j += 2) strings[j] = {1, 2};
            i = run_end + 1;
        } else {
            ++i;
        }
    }
    return make_code(strings);
}

TauRResult tau_r_string(long long s, long long t) {
    if (t < 1) throw std::invalid_argument("tau_r_string: t must be positive");
    if (s < 4) throw InapplicableInput("tau_r_string: needs s >= 4");
    TauRResult r;
    r.value = (s + 1) / 2 + (t - 1);
    r.rewritten_code = tau_r_rewrite(make_code({{s, t}}));
    return r;
}

TauRResult tau_r_code(const GeneratingCode& code) {
    if (code.strings.empty()) throw std::invalid_argument("tau_r_code: empty code");
    TauRResult r;
    r.rewritten_code = tau_r_rewrite(code);
    r.value = beta_threshold(r.rewritten_code).value;
    return r;
}

}  // namespace codegraph
