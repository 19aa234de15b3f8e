use super::{Graph, GraphError};

/// Largest vertex count accepted by the labeled enumerators.
pub const MAX_ENUMERATION_VERTICES: usize = 6;

fn check_cap(n: usize) -> Result<(), GraphError> {
    if n > MAX_ENUMERATION_VERTICES {
        return Err(GraphError::SizeCapExceeded {
            what: "enumeration vertex count",
            got: n,
            cap: MAX_ENUMERATION_VERTICES,
        });
    }
    Ok(())
}

/// Every labeled connected simple graph on exactly `n` vertices, ordered by
/// edge-subset bitmask over the pairs `(0,1), (0,2), .., (n-2,n-1)`.
pub fn labeled_connected_graphs_on(n: usize) -> Result<impl Iterator<Item = Graph>, GraphError> {
    check_cap(n)?;
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let subsets = if n == 0 { 0u32 } else { 1u32 << pairs.len() };
    Ok((0..subsets).filter_map(move |mask| {
        let chosen = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p);
        let g = Graph::new(n, chosen).expect("distinct in-range pairs");
        g.is_connected().then_some(g)
    }))
}

/// Labeled connected graphs for every order `1..=n_max`, smallest first.
pub fn labeled_connected_graphs(n_max: usize) -> Result<impl Iterator<Item = Graph>, GraphError> {
    check_cap(n_max)?;
    Ok((1..=n_max).flat_map(|n| labeled_connected_graphs_on(n).expect("checked above")))
}
