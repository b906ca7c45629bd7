#include "codegraph/metric_dimension.hpp"

#include <stdexcept>

namespace codegraph {

namespace {

// Whether the nearest non-trivial string before position j (0-based) ends in a
// single 1-run after a multi-0 run.  Strings equal to (0,1)=(1,1) are
// transparent to the scan: they never block or trigger the correction.
bool star_prefix_before(const GeneratingCode& code, int j) {
    for (int i = j - 1; i >= 0; --i) {
        const CodeString& cs = code.strings[static_cast<size_t>(i)];
        if (cs.zeros == 1 && cs.ones == 1) continue;
        return cs.zeros > 1 && cs.ones == 1;
    }
    return false;
}

long long stage_increment(const GeneratingCode& code, int j, std::string& rule) {
    const CodeString& cs = code.strings[static_cast<size_t>(j)];
    if (cs.zeros > 1) {
        if (star_prefix_before(code, j)) {
            rule = "multi-zero run after star-like prefix: s+t-1";
            return cs.zeros + cs.ones - 1;
        }
        rule = "multi-zero run: s+t-2";
        return cs.zeros + cs.ones - 2;
    }
    rule = "single-zero run: t";
    return cs.ones;
}

}  // namespace

long long beta_string(long long s, long long t) {
    if (s < 1 || t < 1) throw std::invalid_argument("beta_string: runs must be positive");
    if (s > 1) return s + t - 2;
    return t;
}

BetaResult beta_threshold(const GeneratingCode& code) {
    if (code.strings.empty()) throw std::invalid_argument("beta_threshold: empty code");
    BetaResult r;
    r.family = Family::threshold;
    const CodeString& first = code.strings.front();
    BetaStage base;
    base.string_index = 0;
    base.increment = beta_string(first.zeros, first.ones);
    base.rule = first.zeros > 1 ? "base string: s+t-2" : "base string: t";
    base.running_total = base.increment;
    r.trace.push_back(base);
    r.value = base.increment;
    for (int j = 1; j < code.string_count(); ++j) {
        BetaStage st;
        st.string_index = j;
        st.increment = stage_increment(code, j, st.rule);
        r.value += st.increment;
        st.running_total = r.value;
        r.trace.push_back(st);
    }
    return r;
}

BetaResult beta_chain(const GeneratingCode& code) {
    if (code.strings.empty()) throw std::invalid_argument("beta_chain: empty code");
    BetaResult r;
    r.family = Family::chain;
    const CodeString& s1 = code.strings.front();

    if (code.string_count() == 1) {
        BetaStage st;
        st.string_index = 0;
        if (s1.zeros == 1 && s1.ones == 1) {
            st.increment = 1;  // single edge
            st.rule = "single string (1,1): 1";
        } else {
            st.increment = s1.zeros + s1.ones - 2;
            st.rule = "single string: s+t-2";
        }
        st.running_total = st.increment;
        r.value = st.increment;
        r.trace.push_back(st);
        return r;
    }

    // Two-string base: the chain adjacency changes how the first two strings
    // interact, so they are folded together before the shared iteration.
    const CodeString& s2 = code.strings[1];
    const long long alpha = (s1.zeros + s1.ones == 2) ? 1 : s1.zeros + s1.ones - 2;
    const bool star1 = s1.zeros > 1 && s1.ones == 1;

    BetaStage st0;
    st0.string_index = 0;
    st0.increment = alpha;
    st0.rule = "chain base string";
    st0.running_total = alpha;
    r.trace.push_back(st0);
    r.value = alpha;

    BetaStage st1;
    st1.string_index = 1;
    if (s2.zeros > 1 && s2.ones > 1) {
        st1.increment = s2.zeros + s2.ones - (star1 ? 1 : 2);
        st1.rule = star1 ? "second string, both runs long, star-like first: s+t-1"
                         : "second string, both runs long: s+t-2";
    } else if (s2.zeros > 1 && s2.ones == 1) {
        st1.increment = star1 ? s2.zeros : s2.zeros - 1;
        st1.rule = star1 ? "second string, long zero run, star-like first: s"
                         : "second string, long zero run: s-1";
    } else if (s2.zeros == 1 && s2.ones > 1) {
        st1.increment = s2.ones;
        st1.rule = "second string, single zero: t";
    } else {
        // (1,1) second string
        if (s1.zeros == 1 && s1.ones == 1) {
            // path on four vertices
            r.value = 1;
            st1.increment = 1 - alpha;
            st1.rule = "second string (1,1) after (1,1): path, total 1";
            st1.running_total = 1;
            r.trace.push_back(st1);
        } else {
            st1.increment = 1;
            st1.rule = "second string (1,1): +1";
        }
    }
    if (!(s2.zeros == 1 && s2.ones == 1 && s1.zeros == 1 && s1.ones == 1)) {
        r.value += st1.increment;
        st1.running_total = r.value;
        r.trace.push_back(st1);
    }

    for (int j = 2; j < code.string_count(); ++j) {
        BetaStage st;
        st.string_index = j;
        st.increment = stage_increment(code, j, st.rule);
        r.value += st.increment;
        st.running_total = r.value;
        r.trace.push_back(st);
    }
    return r;
}

BetaBounds beta_bounds(const GeneratingCode& code) {
    if (code.strings.empty()) throw std::invalid_argument("beta_bounds: empty code");
    BetaBounds b;
    bool all_long = true;
    bool all_single_zero = true;
    for (const CodeString& cs : code.strings) {
        b.lower += cs.zeros + cs.ones - 2;
        b.upper += cs.zeros + cs.ones - 1;
        if (cs.zeros == 1 || cs.ones == 1) all_long = false;
        if (cs.zeros != 1) all_single_zero = false;
    }
    b.lower_attained_known = all_long;
    b.upper_attained = all_single_zero;
    return b;
}

GeneralBounds general_bounds(long long n, long long d) {
    if (n < 2 || d < 1) throw std::invalid_argument("general_bounds: need n >= 2, d >= 1");
    GeneralBounds g;
    g.upper = n - d;
    for (long long k = 1;; ++k) {
        // saturating d^k
        long long p = 1;
        bool sat = false;
        for (long long i = 0; i < k; ++i) {
            if (p > n) { sat = true; break; }
            p *= d;
        }
        if (sat || k + p >= n) {
            g.lower = k;
            break;
        }
    }
    return g;
}

}  // namespace codegraph
