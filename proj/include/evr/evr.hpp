#pragma once

#include "evr/certificates.hpp"
#include "evr/cyclic_graph.hpp"
#include "evr/ellipse.hpp"
#include "evr/errors.hpp"
#include "evr/homotopy.hpp"
#include "evr/io.hpp"
#include "evr/profile.hpp"
#include "evr/star.hpp"
#include "evr/step.hpp"
