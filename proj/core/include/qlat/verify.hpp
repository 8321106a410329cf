#pragma once

#include <string>
#include <vector>

namespace qlat {

// One verification line: an identity or oracle comparison with its outcome.
struct CheckLine {
    std::string id;
    bool pass = false;
    std::string witness;      // empty on pass, diagnostic on failure
    double residual = 0;      // numeric deviation where applicable (0 for exact)
    double tolerance = 0;     // 0 means exact equality was required
};

struct Suite {
    std::string name;
    std::vector<CheckLine> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string id, bool pass, std::string witness = "", double residual = 0,
             double tolerance = 0) {
        checks.push_back({std::move(id), pass, std::move(witness), residual, tolerance});
    }
};

struct VerifyOptions {
    bool quick = false;       // reduced ranges / cutoffs
    unsigned seed = 20260823; // RNG seed for property sampling
};

Suite verify_numkit(const VerifyOptions& opt);
Suite verify_bc(const VerifyOptions& opt);
Suite verify_qlat1(const VerifyOptions& opt);
Suite verify_lat2(const VerifyOptions& opt);
Suite verify_modforms(const VerifyOptions& opt);
Suite verify_gl2(const VerifyOptions& opt);

std::vector<Suite> verify_all(const VerifyOptions& opt);

// The twelve release gate checks at their contractual ranges (full cost).
// Each line is one gate; the runner prints one pass/fail line per gate.
Suite acceptance_suite();

}  // namespace qlat
