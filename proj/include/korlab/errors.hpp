#pragma once

#include <stdexcept>
#include <string>

namespace korlab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class TailNotCertified : public Error {
public:
    using Error::Error;
};

class FrequencyTooLargeForRealAngle : public Error {
public:
    using Error::Error;
};

class PoleProximity : public Error {
public:
    using Error::Error;
};

class QuadratureNotConverged : public Error {
public:
    using Error::Error;
};

class IncompatibleGrids : public Error {
public:
    using Error::Error;
};

// Carries the level and cell where E(f_j | F_{j-1}) != f_{j-1}.
class NotAMartingale : public Error {
public:
    NotAMartingale(int level, std::size_t cell, double defect)
        : Error("martingale property fails at level " + std::to_string(level) + ", cell " +
                std::to_string(cell) + " (defect " + std::to_string(defect) + ")"),
          level_(level), cell_(cell) {}
    int level() const { return level_; }
    std::size_t cell() const { return cell_; }

private:
    int level_;
    std::size_t cell_;
};

class PartitionSearchFailed : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

}  // namespace korlab
