//! Reader for TSPLIB-format TSP instances (EUC_2D only). Coordinates are
//! kept as written; no unit-square rescaling.

use super::{CopInstance, InstanceError, ProblemKind};

pub fn parse_tsplib(text: &str) -> Result<CopInstance, InstanceError> {
    let mut dimension: Option<usize> = None;
    let mut weight_type: Option<String> = None;
    let mut problem_type: Option<String> = None;
    let mut coords: Vec<[f64; 2]> = Vec::new();
    let mut in_coords = false;
    let mut saw_coord_section = false;

    for raw in text.lines() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if in_coords {
            if line == "EOF" {
                in_coords = false;
                continue;
            }
            let mut parts = line.split_whitespace();
            let _id = parts
                .next()
                .ok_or_else(|| InstanceError::MalformedLine(line.to_string()))?;
            let x: f64 = parts
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| InstanceError::MalformedLine(line.to_string()))?;
            let y: f64 = parts
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| InstanceError::MalformedLine(line.to_string()))?;
            coords.push([x, y]);
            if Some(coords.len()) == dimension {
                in_coords = false;
            }
            continue;
        }
        if line == "NODE_COORD_SECTION" {
            saw_coord_section = true;
            in_coords = true;
            continue;
        }
        if line == "EOF" {
            break;
        }
        if let Some((key, value)) = line.split_once(':') {
            let key = key.trim();
            let value = value.trim();
            match key {
                "DIMENSION" => {
                    dimension = Some(
                        value
                            .parse()
                            .map_err(|_| InstanceError::MalformedLine(line.to_string()))?,
                    );
                }
                "EDGE_WEIGHT_TYPE" => weight_type = Some(value.to_string()),
                "TYPE" => problem_type = Some(value.to_string()),
                _ => {}
            }
        }
    }

    if let Some(t) = &problem_type {
        if t != "TSP" {
            return Err(InstanceError::UnsupportedProblemType(t.clone()));
        }
    }
    match weight_type.as_deref() {
        Some("EUC_2D") => {}
        Some(other) => return Err(InstanceError::UnsupportedWeightType(other.to_string())),
        None => return Err(InstanceError::UnsupportedWeightType("<missing>".into())),
    }
    if !saw_coord_section {
        return Err(InstanceError::MissingNodeCoordSection);
    }
    let declared = dimension.ok_or(InstanceError::MissingDimension)?;
    if declared != coords.len() {
        return Err(InstanceError::DimensionMismatch {
            declared,
            parsed: coords.len(),
        });
    }

    let mut inst = CopInstance::empty(ProblemKind::TSP, coords.len(), 0);
    inst.coords = coords;
    Ok(inst)
}

#[cfg(test)]
mod tests {
    use super::*;

    const THREE_NODE: &str = "NAME: tri3\n\
TYPE: TSP\n\
COMMENT: three node fixture\n\
DIMENSION: 3\n\
EDGE_WEIGHT_TYPE: EUC_2D\n\
NODE_COORD_SECTION\n\
1 0.0 0.0\n\
2 3.0 0.0\n\
3 0.0 4.0\n\
EOF\n";

    #[test]
    fn parses_three_node_fixture_in_file_order() {
        let inst = parse_tsplib(THREE_NODE).unwrap();
        assert_eq!(inst.n, 3);
        assert_eq!(inst.coords, vec![[0.0, 0.0], [3.0, 0.0], [0.0, 4.0]]);
        // coordinates kept as written, no rescaling into the unit square
        let tour = super::super::Solution::Permutation(vec![0, 1, 2]);
        let len = super::super::evaluate_objective(&inst, &tour).unwrap();
        assert!((len - 12.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_explicit_weights() {
        let text = THREE_NODE.replace("EUC_2D", "EXPLICIT");
        match parse_tsplib(&text) {
            Err(InstanceError::UnsupportedWeightType(t)) => assert_eq!(t, "EXPLICIT"),
            other => panic!("expected UnsupportedWeightType, got {other:?}"),
        }
    }

    #[test]
    fn rejects_missing_coord_section() {
        let text = "NAME: x\nTYPE: TSP\nDIMENSION: 2\nEDGE_WEIGHT_TYPE: EUC_2D\nEOF\n";
        assert!(matches!(
            parse_tsplib(text),
            Err(InstanceError::MissingNodeCoordSection)
        ));
    }

    #[test]
    fn rejects_dimension_mismatch() {
        let text = THREE_NODE.replace("DIMENSION: 3", "DIMENSION: 4");
        assert!(matches!(
            parse_tsplib(&text),
            Err(InstanceError::DimensionMismatch {
                declared: 4,
                parsed: 3
            })
        ));
    }

    #[test]
    fn rejects_non_tsp_type() {
        let text = THREE_NODE.replace("TYPE: TSP", "TYPE: CVRP");
        assert!(matches!(
            parse_tsplib(&text),
            Err(InstanceError::UnsupportedProblemType(_))
        ));
    }

    #[test]
    fn tolerates_keys_without_space_after_colon() {
        let text = THREE_NODE.replace("DIMENSION: 3", "DIMENSION:3");
        assert_eq!(parse_tsplib(&text).unwrap().n, 3);
    }
}
