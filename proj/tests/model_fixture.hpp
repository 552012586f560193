#pragma once

#include "rguard/nlp/pipeline.hpp"

namespace rguard::testing {

/// Model trained once per process on the shipped corpus with default settings.
inline const ModelBundle& corpus_model() {
    static const ModelBundle bundle = [] {
        const auto docs = nlp::load_corpus(RGUARD_DATA_DIR "/corpus");
        return nlp::train_pipeline(docs).bundle;
    }();
    return bundle;
}

}  // namespace rguard::testing
