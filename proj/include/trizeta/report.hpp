#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trizeta/errors.hpp"

namespace trizeta {

// First point of disagreement between two routes: where, what was expected,
// what was computed.
struct Witness {
    std::string index;
    std::string expected;
    std::string actual;
};

// Structured pass/fail outcome of one verification.  A failed report always
// carries a witness.
struct VerificationReport {
    enum class Status { pass, fail, skipped };

    std::string name;
    Status status = Status::skipped;
    std::int64_t checked = 0;  // orders or samples examined
    std::optional<Witness> witness;
    double wall_seconds = 0.0;
    std::vector<std::string> notes;

    static VerificationReport passed(std::string name, std::int64_t checked) {
        VerificationReport r;
        r.name = std::move(name);
        r.status = Status::pass;
        r.checked = checked;
        return r;
    }

    static VerificationReport failed(std::string name, std::int64_t checked, Witness w) {
        VerificationReport r;
        r.name = std::move(name);
        r.status = Status::fail;
        r.checked = checked;
        r.witness = std::move(w);
        return r;
    }

    static VerificationReport skipped_with(std::string name, std::string reason) {
        VerificationReport r;
        r.name = std::move(name);
        r.status = Status::skipped;
        r.notes.push_back(std::move(reason));
        return r;
    }

    bool ok() const { return status != Status::fail; }
};

inline const char* status_str(VerificationReport::Status s) {
    switch (s) {
        case VerificationReport::Status::pass: return "pass";
        case VerificationReport::Status::fail: return "fail";
        default: return "skipped";
    }
}

}  // namespace trizeta
