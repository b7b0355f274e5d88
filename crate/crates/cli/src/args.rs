use clap::{Args, Parser, Subcommand, ValueEnum};

use absorder::search::{SearchKind, DEFAULT_MAX_ORDER};

#[derive(Parser, Debug)]
#[command(name = "absorder", version, about = "Absolute orders on transitive actions of finite Coxeter groups")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub out: Format,

    /// Worker threads for the parallel checks (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Table,
}

#[derive(Args, Debug)]
pub struct GroupArg {
    /// Group descriptor: S4, B3, D4, I2(5), G(3,2).
    #[arg(long, short)]
    pub group: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build Abs(X) for the group itself or for its cosets.
    Poset {
        #[command(flatten)]
        group: GroupArg,
        /// Generators of H, separated by ';'.
        #[arg(long, short)]
        subgroup: Option<String>,
        #[arg(long, value_enum)]
        action: Option<Action>,
    },
    /// Rank polynomials W_T, H_T and X_T and whether they factor.
    Poly {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, short)]
        subgroup: Option<String>,
    },
    /// Decide whether every coset of H has a minimum.
    Modular {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, short)]
        subgroup: String,
    },
    /// Check W_T = H_T(H) X_T, with H's own reflections.
    Quasi {
        #[command(flatten)]
        group: GroupArg,
        /// Generators of H; its reflections are those of W lying in H.
        #[arg(long, short, conflicts_with = "embed", required_unless_present = "embed")]
        subgroup: Option<String>,
        /// A standard embedding with its own Coxeter structure.
        #[arg(long, value_enum)]
        embed: Option<Embedding>,
    },
    /// Flat lattice; with a subgroup, the modular-subgroup/modular-flat comparison.
    Lattice {
        #[command(flatten)]
        group: GroupArg,
        /// Generators of a parabolic subgroup.
        #[arg(long, short)]
        subgroup: Option<String>,
    },
    /// Perfect matchings of {±1..±n}: Abs(M_n) or the flip graph.
    Matchings {
        #[arg(long, short)]
        n: usize,
        /// Check the matching/balanced-element bijection instead.
        #[arg(long)]
        check_bijection: bool,
        /// Emit the flip graph instead of the order.
        #[arg(long)]
        flip_graph: bool,
    },
    /// Absolute order on the alternating subgroup.
    #[command(alias = "alt")]
    Alternating {
        #[command(flatten)]
        group: GroupArg,
        /// Simple reflection s0 (default: the first simple generator).
        #[arg(long)]
        s0: Option<String>,
        /// Run the length, isomorphism and ideal checks.
        #[arg(long)]
        check: bool,
    },
    /// Maximal chain counts of the k-tuple orders against the tree formula.
    Chains {
        /// Largest n (all 1 <= k < n), or the n of a single row with --k.
        #[arg(long, short)]
        n: usize,
        #[arg(long, short)]
        k: Option<usize>,
    },
    /// Run acceptance criteria.
    Verify {
        /// "all" or criterion numbers.
        #[arg(default_value = "all", num_args = 1..)]
        targets: Vec<String>,
        #[arg(long, value_enum, default_value_t = Level::Desk)]
        level: Level,
    },
    /// Exhaustive survey of subgroup classes; reports data, asserts nothing.
    Search {
        #[arg(value_enum)]
        kind: Kind,
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Action {
    /// Left multiplication on W.
    #[value(name = "self")]
    Own,
    /// Left multiplication on W/H.
    Cosets,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Embedding {
    /// B_n in S_2n.
    BInS,
    /// B_(n-1) in D_n.
    BInD,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Level {
    /// Every criterion at the sizes it is stated for.
    Desk,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    NonReflectionModular,
    NonGraded,
    MaximumElement,
    AlmostMaximal,
}

impl From<Kind> for SearchKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::NonReflectionModular => SearchKind::NonReflectionModular,
            Kind::NonGraded => SearchKind::NonGraded,
            Kind::MaximumElement => SearchKind::MaximumElement,
            Kind::AlmostMaximal => SearchKind::AlmostMaximal,
        }
    }
}
