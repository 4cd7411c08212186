#pragma once

#include "error.hpp"
#include "linalg.hpp"
#include "space.hpp"
#include "aops.hpp"
#include "report.hpp"
#include "bounds.hpp"
#include "lemmas.hpp"
#include "applications.hpp"
#include "worked_examples.hpp"
#include "io.hpp"
