//! Stateless JSON API and static UI host.
//!
//! | method | path             | input                               | output           |
//! |--------|------------------|-------------------------------------|------------------|
//! | GET    | `/api/board`     | `rows`, `cols`, `seed` (default 0)  | [`BoardJson`]    |
//! | GET    | `/api/criterion` | `rows`, `cols`                      | [`CriterionJson`]|
//! | GET    | `/api/det`       | `rows`, `cols`                      | [`DetJson`]      |
//! | POST   | `/api/solve`     | [`SolveRequest`]                    | [`SolveReportJson`] |
//! | POST   | `/api/hint`      | [`HintRequest`]                     | [`HintJson`]     |
//!
//! Errors come back as 400 with an [`ErrorJson`] body.
//!
//! [`BoardJson`]: crate::wire::BoardJson
//! [`CriterionJson`]: crate::wire::CriterionJson
//! [`DetJson`]: crate::wire::DetJson
//! [`SolveReportJson`]: crate::wire::SolveReportJson
//! [`HintJson`]: crate::wire::HintJson

use std::path::PathBuf;

use axum::extract::rejection::{JsonRejection, QueryRejection};
use axum::extract::{Query, State};
use axum::http::{header, StatusCode};
use axum::response::{Html, IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};
use tower_http::services::ServeDir;

use crate::commands::{self, AppError, AppResult, Limits};
use crate::wire::{ErrorJson, HintRequest, SolveRequest};

const PLACEHOLDER_INDEX: &str = include_str!("../assets/index.html");

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GridQuery {
    rows: usize,
    cols: usize,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct BoardQuery {
    rows: usize,
    cols: usize,
    #[serde(default)]
    seed: u64,
}

struct ApiError(StatusCode, String);

impl From<AppError> for ApiError {
    fn from(e: AppError) -> Self {
        ApiError(StatusCode::BAD_REQUEST, e.to_string())
    }
}

impl From<QueryRejection> for ApiError {
    fn from(e: QueryRejection) -> Self {
        ApiError(StatusCode::BAD_REQUEST, e.body_text())
    }
}

impl From<JsonRejection> for ApiError {
    fn from(e: JsonRejection) -> Self {
        ApiError(StatusCode::BAD_REQUEST, e.body_text())
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        json_response(self.0, &ErrorJson { error: self.1 })
    }
}

/// Serializes exactly as the command line does, so both produce identical bytes.
fn json_response<T: Serialize>(status: StatusCode, body: &T) -> Response {
    let text = serde_json::to_string(body).expect("wire types serialize");
    (status, [(header::CONTENT_TYPE, "application/json")], text).into_response()
}

async fn compute<T, F>(limits: Limits, f: F) -> Result<Response, ApiError>
where
    T: Serialize + Send + 'static,
    F: FnOnce(&Limits) -> AppResult<T> + Send + 'static,
{
    let out = tokio::task::spawn_blocking(move || f(&limits))
        .await
        .map_err(|e| ApiError(StatusCode::INTERNAL_SERVER_ERROR, e.to_string()))??;
    Ok(json_response(StatusCode::OK, &out))
}

async fn board(State(limits): State<Limits>, q: Result<Query<BoardQuery>, QueryRejection>) -> Result<Response, ApiError> {
    let Query(q) = q?;
    compute(limits, move |l| commands::board(l, q.rows, q.cols, q.seed)).await
}

async fn criterion(State(limits): State<Limits>, q: Result<Query<GridQuery>, QueryRejection>) -> Result<Response, ApiError> {
    let Query(q) = q?;
    compute(limits, move |_| commands::criterion(q.rows, q.cols)).await
}

async fn det(State(limits): State<Limits>, q: Result<Query<GridQuery>, QueryRejection>) -> Result<Response, ApiError> {
    let Query(q) = q?;
    compute(limits, move |l| commands::det(l, q.rows, q.cols)).await
}

async fn solve(State(limits): State<Limits>, body: Result<Json<SolveRequest>, JsonRejection>) -> Result<Response, ApiError> {
    let Json(req) = body?;
    compute(limits, move |l| commands::solve(l, &req)).await
}

async fn hint(State(limits): State<Limits>, body: Result<Json<HintRequest>, JsonRejection>) -> Result<Response, ApiError> {
    let Json(req) = body?;
    compute(limits, move |l| commands::hint(l, &req)).await
}

/// The API plus the UI: files under `ui_dir` when given, else a placeholder page.
pub fn router(limits: Limits, ui_dir: Option<PathBuf>) -> Router {
    let api = Router::new()
        .route("/api/board", get(board))
        .route("/api/criterion", get(criterion))
        .route("/api/det", get(det))
        .route("/api/solve", post(solve))
        .route("/api/hint", post(hint))
        .with_state(limits);
    match ui_dir {
        Some(dir) => api.fallback_service(ServeDir::new(dir).append_index_html_on_directories(true)),
        None => api.route("/", get(|| async { Html(PLACEHOLDER_INDEX) })),
    }
}

pub async fn serve(limits: Limits, port: u16, ui_dir: Option<PathBuf>) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(("0.0.0.0", port)).await?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router(limits, ui_dir))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}
