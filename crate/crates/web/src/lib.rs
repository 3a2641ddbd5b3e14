//! WebAssembly bindings behind the browser demo in `www/`.
//!
//! Graphs cross the boundary as text (graph6 or an edge list) and come back
//! as flat `[u0, v0, u1, v1, ...]` edge arrays. Errors are plain strings.

use msnum::closedforms::FamilySpec;
use msnum::graph::parse_graph6;
use msnum::graphstate::{
    amplitudes, is_bent, readonce_descriptor, schmidt_rank_bipartite, wht_spectrum,
};
use msnum::{ms_number, plus_number, Graph, QuadraticPolynomial};
use wasm_bindgen::prelude::*;

/// Amplitude and spectrum listings are only produced up to this order.
pub const LISTING_CAP: usize = 10;

/// Largest graph the demo analyzes.
pub const ORDER_CAP: usize = 64;

fn parse(text: &str) -> Result<Graph, String> {
    let looks_like_edges = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .all(|l| l.split_whitespace().all(|t| t.parse::<usize>().is_ok()));
    let g = if looks_like_edges && !text.trim().is_empty() {
        Graph::parse_edge_list(text)
    } else {
        parse_graph6(text.trim())
    }
    .map_err(|e| e.to_string())?;
    if g.order() > ORDER_CAP {
        return Err(format!("the demo handles at most {ORDER_CAP} vertices"));
    }
    Ok(g)
}

fn flat_edges(g: &Graph) -> Vec<u32> {
    g.edges().flat_map(|(u, v)| [u as u32, v as u32]).collect()
}

#[wasm_bindgen]
pub struct Analysis {
    order: usize,
    edges: Vec<u32>,
    graph6: String,
    ms_number: String,
    plus_number: String,
    rank: usize,
    readonce: String,
    schmidt: Option<u32>,
    bent: Option<bool>,
    amplitudes: Option<String>,
    spectrum: Option<String>,
}

#[wasm_bindgen]
impl Analysis {
    #[wasm_bindgen(getter)]
    pub fn order(&self) -> usize {
        self.order
    }

    #[wasm_bindgen(getter)]
    pub fn edges(&self) -> Vec<u32> {
        self.edges.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn graph6(&self) -> String {
        self.graph6.clone()
    }

    /// Decimal string, since the value can exceed 2^53.
    #[wasm_bindgen(getter)]
    pub fn ms_number(&self) -> String {
        self.ms_number.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn plus_number(&self) -> String {
        self.plus_number.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn rank(&self) -> usize {
        self.rank
    }

    #[wasm_bindgen(getter)]
    pub fn readonce(&self) -> String {
        self.readonce.clone()
    }

    /// Present only for bipartite graphs.
    #[wasm_bindgen(getter)]
    pub fn schmidt(&self) -> Option<u32> {
        self.schmidt
    }

    #[wasm_bindgen(getter)]
    pub fn bent(&self) -> Option<bool> {
        self.bent
    }

    #[wasm_bindgen(getter)]
    pub fn amplitudes(&self) -> Option<String> {
        self.amplitudes.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn spectrum(&self) -> Option<String> {
        self.spectrum.clone()
    }
}

/// Everything the page shows about one graph.
#[wasm_bindgen]
pub fn analyze(text: &str) -> Result<Analysis, String> {
    let g = parse(text)?;
    let n = g.order();
    let f = QuadraticPolynomial::from_graph(&g);
    let small = n <= LISTING_CAP;
    Ok(Analysis {
        order: n,
        edges: flat_edges(&g),
        graph6: g.to_graph6(),
        ms_number: ms_number(&g).to_string(),
        plus_number: plus_number(&g).to_string(),
        rank: g.adjacency().rank(),
        readonce: readonce_descriptor(&g).to_string(),
        schmidt: schmidt_rank_bipartite(&g).ok().map(|r| r as u32),
        bent: if small { is_bent(&f).ok() } else { None },
        amplitudes: if small {
            amplitudes(&g).ok().map(|a| a.render())
        } else {
            None
        },
        spectrum: if small {
            wht_spectrum(&f).ok().map(|s| s.render())
        } else {
            None
        },
    })
}

#[wasm_bindgen]
pub fn local_complement(text: &str, v: usize) -> Result<Vec<u32>, String> {
    let g = parse(text)?
        .local_complement(v)
        .map_err(|e| e.to_string())?;
    Ok(flat_edges(&g))
}

#[wasm_bindgen]
pub fn pivot(text: &str, u: usize, v: usize) -> Result<Vec<u32>, String> {
    let g = parse(text)?.pivot(u, v).map_err(|e| e.to_string())?;
    Ok(flat_edges(&g))
}

#[wasm_bindgen]
pub struct FamilyMember {
    order: usize,
    edges: Vec<u32>,
    closed_form: String,
    computed: String,
}

#[wasm_bindgen]
impl FamilyMember {
    #[wasm_bindgen(getter)]
    pub fn order(&self) -> usize {
        self.order
    }

    #[wasm_bindgen(getter)]
    pub fn edges(&self) -> Vec<u32> {
        self.edges.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn closed_form(&self) -> String {
        self.closed_form.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn computed(&self) -> String {
        self.computed.clone()
    }
}

/// Builds a family member from whitespace-separated parameters, e.g.
/// `family("complete-bipartite", "2 3")`, with both the closed form and the
/// general algorithm's value.
#[wasm_bindgen]
pub fn family(name: &str, params: &str) -> Result<FamilyMember, String> {
    let params: Vec<usize> = params
        .split([' ', ','])
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| format!("bad parameter {t:?}")))
        .collect::<Result<_, _>>()?;
    let spec = FamilySpec::from_name(name, &params).map_err(|e| e.to_string())?;
    let g = spec.graph().map_err(|e| e.to_string())?;
    if g.order() > ORDER_CAP {
        return Err(format!("the demo handles at most {ORDER_CAP} vertices"));
    }
    Ok(FamilyMember {
        order: g.order(),
        edges: flat_edges(&g),
        closed_form: spec.weight().map_err(|e| e.to_string())?.to_string(),
        computed: ms_number(&g).to_string(),
    })
}
