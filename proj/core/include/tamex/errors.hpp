#ifndef TAMEX_ERRORS_HPP
#define TAMEX_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tamex {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public Error {
public:
    using Error::Error;
};

// Malformed record in a corpus, lexicon or index file.
class FormatError : public Error {
public:
    FormatError(std::size_t line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class UnknownLabelError : public Error {
public:
    explicit UnknownLabelError(const std::string& label)
        : Error("unknown tense/aspect/modality label: \"" + label + "\""),
          label_(label) {}
    const std::string& label() const { return label_; }

private:
    std::string label_;
};

class EmptySentenceError : public Error {
public:
    EmptySentenceError() : Error("sentence is empty") {}
};

// Comparing or querying unit sequences produced by different methods.
class MethodMismatchError : public Error {
public:
    using Error::Error;
};

class EmptyCorpusError : public Error {
public:
    using Error::Error;
};

class EmptyIndexError : public Error {
public:
    EmptyIndexError() : Error("index contains no entries") {}
};

class EmptyNeighborListError : public Error {
public:
    EmptyNeighborListError() : Error("neighbor list is empty") {}
};

class EmptyTrainingSetError : public Error {
public:
    EmptyTrainingSetError() : Error("training set is empty") {}
};

// The English labeler found nothing that looks like a verb.
class UnlabelableError : public Error {
public:
    explicit UnlabelableError(const std::string& sentence)
        : Error("no recognizable verb in: \"" + sentence + "\"") {}
};

}  // namespace tamex

#endif  // TAMEX_ERRORS_HPP
