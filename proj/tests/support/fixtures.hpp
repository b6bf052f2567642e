#pragma once

#include <string>

// Shared manifests and the documents they must produce. Golden strings
// hold the document body without a trailing newline; the CLI appends
// '\n' to every line when writing files.
namespace fixtures {

// --- Anscombe quartet: four plots, no decorators, no options ---------

inline const std::string kAnscombeManifest = R"YAML(document:
  title: Anscombe's Quartet
  author: Francis Anscombe
  date: "1973"
generator:
  imports: [ggplot2]
  load_expr: readRDS("comp-comp.rds")
components:
  Linear:
    tags: [gg, ggplot]
  Non Linear:
    tags: [gg, ggplot]
  Outlier Vertical:
    tags: [gg, ggplot]
  Outlier Horizontal:
    tags: [gg, ggplot]
)YAML";

inline const std::string kAnscombeDocument = R"GOLD(---
title: Anscombe's Quartet
author: Francis Anscombe
date: '1973'
output: html_document
---

```{r}
library(ggplot2)

cc_list <- readRDS("comp-comp.rds")
```

# Linear

```{r}
cc_list$Linear
```

# Non Linear

```{r}
cc_list$`Non Linear`
```

# Outlier Vertical

```{r}
cc_list$`Outlier Vertical`
```

# Outlier Horizontal

```{r}
cc_list$`Outlier Horizontal`
```)GOLD";

// --- Anscombe with document-wide echo = FALSE and a Data leaf --------

inline const std::string kAnscombeEchoManifest = R"YAML(document:
  title: Anscombe's Quartet
  author: Francis Anscombe
  date: "1973"
generator:
  imports: [ggplot2]
  load_expr: readRDS("comp-comp.rds")
  chunk_opts:
    echo: false
components:
  Linear:
    tags: [gg, ggplot]
  Non Linear:
    tags: [gg, ggplot]
  Outlier Vertical:
    tags: [gg, ggplot]
  Outlier Horizontal:
    tags: [gg, ggplot]
  Data:
    tags: [data.frame]
)YAML";

inline const std::string kAnscombeEchoDocument = R"GOLD(---
title: Anscombe's Quartet
author: Francis Anscombe
date: '1973'
output: html_document
---

```{r echo = FALSE}
library(ggplot2)

cc_list <- readRDS("comp-comp.rds")
```

# Linear

```{r echo = FALSE}
cc_list$Linear
```

# Non Linear

```{r echo = FALSE}
cc_list$`Non Linear`
```

# Outlier Vertical

```{r echo = FALSE}
cc_list$`Outlier Vertical`
```

# Outlier Horizontal

```{r echo = FALSE}
cc_list$`Outlier Horizontal`
```

# Data

```{r echo = FALSE}
cc_list$Data
```)GOLD";

// --- Anscombe with a datatable decorator for data frames -------------

inline const std::string kAnscombeDatatableManifest = R"YAML(document:
  title: Anscombe's Quartet
  author: Francis Anscombe
  date: "1973"
generator:
  imports: [ggplot2, DT]
  load_expr: readRDS("comp-comp.rds")
  decorators:
    data.frame: datatable
components:
  Linear:
    tags: [gg, ggplot]
  Non Linear:
    tags: [gg, ggplot]
  Outlier Vertical:
    tags: [gg, ggplot]
  Outlier Horizontal:
    tags: [gg, ggplot]
  Data:
    tags: [data.frame]
)YAML";

inline const std::string kAnscombeDatatableDocument = R"GOLD(---
title: Anscombe's Quartet
author: Francis Anscombe
date: '1973'
output: html_document
---

```{r}
library(ggplot2)
library(DT)

cc_list <- readRDS("comp-comp.rds")
```

# Linear

```{r}
cc_list$Linear
```

# Non Linear

```{r}
cc_list$`Non Linear`
```

# Outlier Vertical

```{r}
cc_list$`Outlier Vertical`
```

# Outlier Horizontal

```{r}
cc_list$`Outlier Horizontal`
```

# Data

```{r}
datatable(cc_list$Data)
```)GOLD";

// --- Nested iris tree: init block plus decorator-wide options --------

inline const std::string kIrisManifest = R"YAML(document:
  title: Iris Components
root_label: comp_comp2
generator:
  imports: [ggplot2, DT, purrr]
  load_expr: readRDS("comp-comp2.rds")
  init_block: 'datatable_no_search <- partial(datatable, options = list(dom = "t"))'
  chunk_opts:
    echo: false
  decorator_chunk_opts:
    ggplot:
      fig.width: 100
      fig.height: 200
components:
  Iris:
    tags: [data.frame]
  Sepal.Length:
    Sepal.Width:
      tags: [gg, ggplot]
    Petal.Length:
      tags: [gg, ggplot]
    Colored:
      Sepal.Width:
        tags: [gg, ggplot]
      Petal.Length:
        tags: [gg, ggplot]
)YAML";

inline const std::string kIrisDocument = R"GOLD(---
title: Iris Components
output: html_document
---

```{r echo = FALSE}
library(ggplot2)
library(DT)
library(purrr)

cc_list <- readRDS("comp-comp2.rds")

datatable_no_search <- partial(datatable, options = list(dom = "t"))
```

# Iris

```{r echo = FALSE}
cc_list$Iris
```

# Sepal.Length

## Sepal.Width

```{r echo = FALSE, fig.width = 100, fig.height = 200}
cc_list$Sepal.Length$Sepal.Width
```

## Petal.Length

```{r echo = FALSE, fig.width = 100, fig.height = 200}
cc_list$Sepal.Length$Petal.Length
```

## Colored

### Sepal.Width

```{r echo = FALSE, fig.width = 100, fig.height = 200}
cc_list$Sepal.Length$Colored$Sepal.Width
```

### Petal.Length

```{r echo = FALSE, fig.width = 100, fig.height = 200}
cc_list$Sepal.Length$Colored$Petal.Length
```)GOLD";

// The iris tree as the dendrogram renders it.
inline const std::string kIrisDendrogram = R"GOLD(comp_comp2
  |-- Iris
  |  o-- object of type(s):data.frame
  o-- Sepal.Length
     |-- Sepal.Width
     |  o-- object of type(s):gg ggplot
     |-- Petal.Length
     |  o-- object of type(s):gg ggplot
     o-- Colored
        |-- Sepal.Width
        |  o-- object of type(s):gg ggplot
        o-- Petal.Length
           o-- object of type(s):gg ggplot)GOLD";

// The same tree as printed with hand-set indentation; comparisons
// normalize leading whitespace.
inline const std::string kIrisDendrogramRagged = R"GOLD(comp_comp2
  |-- Iris
  |  o-- object of type(s):data.frame
  o-- Sepal.Length
   |-- Sepal.Width
   |  o-- object of type(s):gg ggplot
   |-- Petal.Length
   |  o-- object of type(s):gg ggplot
   o-- Colored
    |-- Sepal.Width
    |  o-- object of type(s):gg ggplot
    o-- Petal.Length
       o-- object of type(s):gg ggplot)GOLD";

// --- Trial report: decorators, per-tag options, tabsets --------------

inline const std::string kTrialManifest = R"YAML(document:
  title: Simple Trial Report
root_label: surv_cc
generator:
  imports: [gtsummary, flextable, DT, ggplot2]
  load_expr: readRDS("surv-cc.rds")
  chunk_opts:
    echo: false
    message: false
    warning: false
    fig.width: 7
    fig.height: 4.5
  decorators:
    data.frame: datatable
  decorator_chunk_opts:
    gg:
      fig.width: 8
      fig.height: 6
components:
  Table 1:
    tags: [flextable]
  Survival Plots:
    Overall {.tabset}:
      Plot:
        tags: [gg, ggplot]
      Data:
        tags: [data.frame]
      Table:
        tags: [data.frame]
    Stage {.tabset}:
      Plot:
        tags: [gg, ggplot]
      Data:
        tags: [data.frame]
      Table:
        tags: [data.frame]
    Grade {.tabset}:
      Plot:
        tags: [gg, ggplot]
      Data:
        tags: [data.frame]
      Table:
        tags: [data.frame]
)YAML";

inline const std::string kTrialDocument = R"GOLD(---
title: Simple Trial Report
output: html_document
---

```{r echo = FALSE, message = FALSE, warning = FALSE, fig.width = 7, fig.height = 4.5}
library(gtsummary)
library(flextable)
library(DT)
library(ggplot2)

cc_list <- readRDS("surv-cc.rds")
```

# Table 1

```{r echo = FALSE, message = FALSE, warning = FALSE, fig.width = 7, fig.height = 4.5}
cc_list$`Table 1`
```

# Survival Plots

## Overall {.tabset}

### Plot

```{r echo = FALSE, message = FALSE, warning = FALSE, fig.width = 8, fig.height = 6}
cc_list$`Survival Plots`$`Overall {.tabset}`$Plot
```

### Data

```{r echo = FALSE, message = FALSE, warning = FALSE, fig.width = 7, fig.height = 4.5}
datatable(cc_list$`Survival Plots`$`Overall {.tabset}`$Data)
```

### Table

```{r echo = FALSE, message = FALSE, warning = FALSE, fig.width = 7, fig.height = 4.5}
datatable(cc_list$`Survival Plots`$`Overall {.tabset}`$Table)
```

## Stage {.tabset}

### Plot

```{r echo = FALSE, message = FALSE, warning = FALSE, fig.width = 8, fig.height = 6}
cc_list$`Survival Plots`$`Stage {.tabset}`$Plot
```

### Data

```{r echo = FALSE, message = FALSE, warning = FALSE, fig.width = 7, fig.height = 4.5}
datatable(cc_list$`Survival Plots`$`Stage {.tabset}`$Data)
```

### Table

```{r echo = FALSE, message = FALSE, warning = FALSE, fig.width = 7, fig.height = 4.5}
datatable(cc_list$`Survival Plots`$`Stage {.tabset}`$Table)
```

## Grade {.tabset}

### Plot

```{r echo = FALSE, message = FALSE, warning = FALSE, fig.width = 8, fig.height = 6}
cc_list$`Survival Plots`$`Grade {.tabset}`$Plot
```

### Data

```{r echo = FALSE, message = FALSE, warning = FALSE, fig.width = 7, fig.height = 4.5}
datatable(cc_list$`Survival Plots`$`Grade {.tabset}`$Data)
```

### Table

```{r echo = FALSE, message = FALSE, warning = FALSE, fig.width = 7, fig.height = 4.5}
datatable(cc_list$`Survival Plots`$`Grade {.tabset}`$Table)
```)GOLD";

} // namespace fixtures
