#pragma once

#include "gcs/cli.hpp"
#include "gcs/decomp.hpp"
#include "gcs/error.hpp"
#include "gcs/fixtures.hpp"
#include "gcs/geom.hpp"
#include "gcs/graph.hpp"
#include "gcs/henneberg.hpp"
#include "gcs/io.hpp"
#include "gcs/plan.hpp"
#include "gcs/plan_exec.hpp"
#include "gcs/render.hpp"
#include "gcs/rigidity.hpp"
