use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::Serialize;
use sglab_core::script::{parse, RunReport};

use crate::openapi;
use crate::store::SessionStore;
use crate::wire::{StackView, WireCommand};

/// Error body: `{"error": message, "code": machine-readable code}`.
#[derive(Debug, Serialize)]
pub struct ApiError {
    #[serde(skip)]
    status: StatusCode,
    pub error: String,
    pub code: String,
}

impl ApiError {
    fn new(status: StatusCode, code: &str, error: impl Into<String>) -> Self {
        ApiError {
            status,
            error: error.into(),
            code: code.to_string(),
        }
    }

    fn no_session(id: &str) -> Self {
        Self::new(
            StatusCode::NOT_FOUND,
            "no-session",
            format!("no session `{id}`"),
        )
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status, Json(self)).into_response()
    }
}

type Result<T> = std::result::Result<Json<T>, ApiError>;

#[derive(Debug, Serialize)]
struct Created {
    id: String,
}

/// Full session view returned by `GET /sessions/{id}`.
#[derive(Debug, Serialize)]
struct SessionView {
    id: String,
    created_at: chrono::DateTime<chrono::Utc>,
    history: usize,
    #[serde(flatten)]
    stack: StackView,
}

pub fn router(store: Arc<SessionStore>) -> Router {
    Router::new()
        .route("/healthz", get(|| async { "ok" }))
        .route("/spec", get(|| async { Json(openapi::document()) }))
        .route("/sessions", post(create))
        .route("/sessions/{id}", get(show))
        .route("/sessions/{id}/commands", post(command))
        .route("/sessions/{id}/undo", post(undo))
        .route("/sessions/{id}/script", post(script))
        .fallback(|| async {
            ApiError::new(StatusCode::NOT_FOUND, "not-found", "no such endpoint")
        })
        .with_state(store)
}

async fn create(State(store): State<Arc<SessionStore>>) -> Json<Created> {
    let id = store.create();
    tracing::debug!(%id, "session created");
    Json(Created { id })
}

async fn show(
    State(store): State<Arc<SessionStore>>,
    Path(id): Path<String>,
) -> Result<SessionView> {
    let session = store.get(&id).ok_or_else(|| ApiError::no_session(&id))?;
    let mut s = session.lock().unwrap();
    let stack = StackView::from(s.view());
    Ok(Json(SessionView {
        id: s.id.clone(),
        created_at: s.created_at,
        history: s.history_len(),
        stack,
    }))
}

async fn command(
    State(store): State<Arc<SessionStore>>,
    Path(id): Path<String>,
    body: Bytes,
) -> Result<StackView> {
    let session = store.get(&id).ok_or_else(|| ApiError::no_session(&id))?;
    let wire: WireCommand = serde_json::from_slice(&body)
        .map_err(|e| ApiError::new(StatusCode::BAD_REQUEST, "bad-command", e.to_string()))?;
    let command = wire
        .to_command()
        .map_err(|e| ApiError::new(StatusCode::BAD_REQUEST, "bad-command", e))?;
    let mut s = session.lock().unwrap();
    let stack = s
        .apply(command)
        .map_err(|e| ApiError::new(StatusCode::CONFLICT, e.code(), format!("`{command}`: {e}")))?;
    Ok(Json(StackView::from(stack)))
}

async fn undo(State(store): State<Arc<SessionStore>>, Path(id): Path<String>) -> Result<StackView> {
    let session = store.get(&id).ok_or_else(|| ApiError::no_session(&id))?;
    let mut s = session.lock().unwrap();
    match s.undo() {
        Some(stack) => Ok(Json(StackView::from(stack))),
        None => Err(ApiError::new(
            StatusCode::CONFLICT,
            "nothing-to-undo",
            "nothing to undo",
        )),
    }
}

async fn script(
    State(store): State<Arc<SessionStore>>,
    Path(id): Path<String>,
    body: Bytes,
) -> Result<RunReport> {
    let session = store.get(&id).ok_or_else(|| ApiError::no_session(&id))?;
    let text = std::str::from_utf8(&body).map_err(|_| {
        ApiError::new(
            StatusCode::BAD_REQUEST,
            "parse-error",
            "script is not UTF-8",
        )
    })?;
    let script = parse(text)
        .map_err(|e| ApiError::new(StatusCode::BAD_REQUEST, "parse-error", e.to_string()))?;
    let mut s = session.lock().unwrap();
    let report = s
        .run(&script)
        .map_err(|e| ApiError::new(StatusCode::CONFLICT, e.error.code(), e.to_string()))?;
    Ok(Json(report))
}
