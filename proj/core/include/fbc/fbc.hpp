#pragma once

#include "fbc/algebra.hpp"
#include "fbc/brauer.hpp"
#include "fbc/classify.hpp"
#include "fbc/configuration.hpp"
#include "fbc/congruence.hpp"
#include "fbc/corpus.hpp"
#include "fbc/errors.hpp"
#include "fbc/fraction.hpp"
#include "fbc/frobenius.hpp"
#include "fbc/gabriel.hpp"
#include "fbc/generators.hpp"
#include "fbc/io.hpp"
#include "fbc/quiver.hpp"
#include "fbc/random.hpp"
#include "fbc/report.hpp"
#include "fbc/sequences.hpp"
