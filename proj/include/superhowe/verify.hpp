#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superhowe/decompose.hpp"

namespace superhowe {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CheckLedger {
    std::vector<Check> checks;
    bool all_pass() const {
        for (const Check& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(const std::string& name, bool pass, const std::string& detail = "") {
        checks.push_back({name, pass, detail});
    }
};

struct VerifyOptions {
    int n = 0;      // 0 = use the target's default
    int dmax = -1;  // -1 = use the target's default
    unsigned long long seed = 12345;
};

struct VerifyTarget {
    std::string id;
    std::string description;
    int default_n;
    int default_dmax;
};

// The named claim suites runnable via `verify <id>`:
//   A1     omega = zeta_{1,2}(x_1^d nu_{n,k}) and the omega / omega~ joint
//          highest-weight properties with their closed-form weights
//   A2     (|I|-1)! Gamma(I) equals the column determinant identity, |I| <= 4
//   T62    harmonicity filter: omega~_{d,k} harmonic iff k <= n+1, with the
//          exact nonvanishing image under D_12 for k = n+l, l >= 2
//   PLP    one-variable harmonics s_{n,k}: D_22-harmonic spo highest weight
//          vectors of weight (1_m, 0_{n-m})
//   GLGL   hook-diagram census of the unrestricted (gl(2n|1), gl(1|1)) joint
//          highest weight vectors, each proportional to an omega
//   TWRB   odd reflection chain carries omega_{d,k} to omega~_{d,k} up to a
//          nonzero scalar, with the reflected Borel weights
//   SHIFT  zeta vs F operator identities (Cartan shift by (2n-1)/2)
//   CLOS   osp(2|2) closure of {F,D,R} under supercommutators
//   DUAL   dual-pair supercommutation: [spo, {F,D,R}] = 0, [gl_big, gl_small] = 0
//   KDIR   direct sum S^d = harmonic + lowered image with trivial intersection
//   HDEC   harmonic decomposition shape, multiplicities and completeness
//   INTRO  the frozen n=1 decomposition table
//   PSPLIT parity separation of spo weights across even/odd degrees
//   DUALITY truncated full-space dimension audit via n'- generation
//   PROPS  seeded randomized property suite (1000 cases)
const std::vector<VerifyTarget>& verify_targets();

bool is_verify_target(const std::string& id);

// Runs one suite; throws std::invalid_argument for unknown ids.
CheckLedger run_verify(const std::string& id, const VerifyOptions& opts);

// Expected n=1 rows of the harmonic decomposition at one degree, frozen from
// the classification: (spo weight, partner weight, spo dim, partner dim).
struct ExpectedEntry {
    Weight spo_weight;
    Weight partner_weight;
    long spo_dim;
    long partner_dim;
};
std::vector<ExpectedEntry> expected_n1_rows(int degree);

// a = c * b for a nonzero scalar c?
std::optional<Rational> proportional(const SuperPoly& a, const SuperPoly& b);

}  // namespace superhowe
