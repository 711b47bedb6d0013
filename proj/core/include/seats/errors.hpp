#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace seats {

/// Two priority values compared exactly equal during seat assignment.
/// The engine never tie-breaks; callers must resolve or reject the instance.
class TieDetected : public std::runtime_error {
public:
    TieDetected(int state_a, int state_b, int round)
        : std::runtime_error("priority tie between states " + std::to_string(state_a) +
                             " and " + std::to_string(state_b) + " at seat " +
                             std::to_string(round)),
          states{state_a, state_b}, seat_round(round) {}

    std::vector<int> states;
    int seat_round;
};

class OutOfWedge : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class OutOfRange : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The limiting quota q3 is an integer, so asymptotic classification is undefined.
class ExceptionalTau : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Requested a non-violatory threshold for an ultimately violatory tau.
class ViolatoryTau : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class UnsupportedMethod : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class UnsupportedDensity : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NoStabilization : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InsufficientSamples : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace seats
